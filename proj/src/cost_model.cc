#include "statcore/cost_model.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace statcore {

namespace {

constexpr double kMicronsPerCm = 1e4;

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value, size_t line) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw std::invalid_argument(
            "config line " + std::to_string(line) + ": bad value '" + std::string(value) + "' for " +
            std::string(key));
    }
    return out;
}

}  // namespace

void TechParams::validate() const {
    auto check_int = [](int64_t v, const char *name) {
        if (v <= 0) {
            throw std::invalid_argument(std::string(name) + " must be positive");
        }
    };
    auto check_real = [](double v, const char *name) {
        if (!(v > 0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(name) + " must be positive");
        }
    };
    check_int(address_bits, "address_bits");
    check_int(data_transistors, "data_transistors");
    check_int(cell_transistors_per_address_bit, "cell_transistors_per_address_bit");
    check_int(bus_transistors_per_address_bit, "bus_transistors_per_address_bit");
    check_real(transistor_area, "transistor_area");
    check_real(wafer_radius, "wafer_radius");
    check_real(bus_distance, "bus_distance");
    check_real(delay_per_cm, "delay_per_cm");
}

TechParams TechParams::parse_config(std::string_view text) {
    TechParams p;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        line_no++;

        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));

        if (key == "address_bits") {
            p.address_bits = parse_number<int64_t>(key, value, line_no);
        } else if (key == "data_transistors") {
            p.data_transistors = parse_number<int64_t>(key, value, line_no);
        } else if (key == "cell_transistors_per_address_bit") {
            p.cell_transistors_per_address_bit = parse_number<int64_t>(key, value, line_no);
        } else if (key == "bus_transistors_per_address_bit") {
            p.bus_transistors_per_address_bit = parse_number<int64_t>(key, value, line_no);
        } else if (key == "transistor_area") {
            p.transistor_area = parse_number<double>(key, value, line_no);
        } else if (key == "wafer_radius") {
            p.wafer_radius = parse_number<double>(key, value, line_no);
        } else if (key == "bus_distance") {
            p.bus_distance = parse_number<double>(key, value, line_no);
        } else if (key == "delay_per_cm") {
            p.delay_per_cm = parse_number<double>(key, value, line_no);
        } else {
            throw std::invalid_argument(
                "config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    p.validate();
    return p;
}

int64_t word_cost(const TechParams &p) {
    p.validate();
    return p.data_transistors + p.address_bits * p.cell_transistors_per_address_bit +
           p.address_bits * p.bus_transistors_per_address_bit;
}

double gate_delay(const TechParams &p) {
    p.validate();
    return p.bus_distance * p.delay_per_cm;
}

CostReport wafer_report(const TechParams &p) {
    p.validate();
    CostReport r;
    r.transistors_per_word = word_cost(p);
    r.gate_delay_ns = gate_delay(p);

    double radius_um = p.wafer_radius * kMicronsPerCm;
    double transistors = std::floor(std::numbers::pi * radius_um * radius_um / p.transistor_area);
    if (transistors >= 18446744073709551616.0) {
        throw std::invalid_argument("wafer transistor count exceeds 64 bits");
    }
    r.wafer_transistors = static_cast<uint64_t>(transistors);
    r.word_capacity = r.wafer_transistors / static_cast<uint64_t>(r.transistors_per_word);
    r.word_capacity_gw = static_cast<double>(r.word_capacity) / kWordsPerGigaword;
    r.feasible = r.word_capacity > 0;
    r.address_space_bits = r.feasible ? std::bit_width(r.word_capacity) - 1 : 0;
    return r;
}

}  // namespace statcore
