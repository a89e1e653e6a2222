#include "statcore/circuit_format.h"

#include <charconv>
#include <sstream>

namespace statcore {

ParseError::ParseError(size_t line, const std::string &reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {
}

namespace {

// Position of the most recent directive, used to reject out-of-order input.
enum class Stage {
    Start,
    Lines,
    Init,
    Pre,
    Steps,
    Post,
};

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            i++;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

bool parse_decimal(std::string_view s, uint64_t &out) {
    if (s.empty() || s.front() < '0' || s.front() > '9') {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

class Parser {
   public:
    Program parse(std::string_view text) {
        while (!text.empty() || line_no_ == 0) {
            size_t eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
            line_no_++;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            line = line.substr(0, line.find('#'));
            auto words = split_words(line);
            if (!words.empty()) {
                directive(words);
            }
        }
        if (stage_ == Stage::Start) {
            throw ParseError(line_no_, "missing 'lines' directive");
        }
        return std::move(program_);
    }

   private:
    [[noreturn]] void fail(const std::string &reason) const {
        throw ParseError(line_no_, reason);
    }

    void advance(Stage next, const char *name) {
        if (stage_ == Stage::Start && next != Stage::Lines) {
            fail(std::string("'") + name + "' before 'lines'");
        }
        if ((next == stage_ && next != Stage::Steps) || (next == Stage::Lines && stage_ != Stage::Start)) {
            fail(std::string("duplicate '") + name + "'");
        }
        if (next < stage_) {
            fail(std::string("'") + name + "' out of order");
        }
        stage_ = next;
    }

    void expect_count(const std::vector<std::string_view> &words, size_t count) const {
        if (words.size() != count) {
            fail("'" + std::string(words[0]) + "' expects " + std::to_string(count - 1) + " argument(s), got " +
                 std::to_string(words.size() - 1));
        }
    }

    void directive(const std::vector<std::string_view> &words) {
        std::string_view head = words[0];
        if (head == "lines") {
            advance(Stage::Lines, "lines");
            expect_count(words, 2);
            uint64_t n = 0;
            if (!parse_decimal(words[1], n) || n < 1 || n > kMaxAddressBits) {
                fail("bad line count '" + std::string(words[1]) + "'");
            }
            program_.num_lines = n;
        } else if (head == "init") {
            advance(Stage::Init, "init");
            expect_count(words, 2);
            program_.init = parse_bitstring(words[1]);
        } else if (head == "pre" || head == "post") {
            advance(head == "pre" ? Stage::Pre : Stage::Post, head == "pre" ? "pre" : "post");
            expect_count(words, 2);
            if (words[1] != "hadamard") {
                fail("unknown transform '" + std::string(words[1]) + "'");
            }
            (head == "pre" ? program_.pre_hadamard : program_.post_hadamard) = true;
        } else if (head == "step") {
            advance(Stage::Steps, "step");
            program_.steps.push_back(parse_step(words));
        } else {
            fail("unknown directive '" + std::string(head) + "'");
        }
    }

    Address parse_bitstring(std::string_view bits) const {
        if (bits.size() != program_.num_lines) {
            fail("init expects " + std::to_string(program_.num_lines) + " bits, got '" + std::string(bits) + "'");
        }
        Address index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                fail("init bits must be 0 or 1, got '" + std::string(bits) + "'");
            }
            index = (index << 1) | static_cast<Address>(c == '1');
        }
        return index;
    }

    Line parse_line_ref(std::string_view token) const {
        uint64_t k = 0;
        if (token.size() < 2 || token[0] != 'A' || !parse_decimal(token.substr(1), k)) {
            fail("malformed line reference '" + std::string(token) + "'");
        }
        if (k >= program_.num_lines) {
            fail("line " + std::string(token) + " out of range for " + std::to_string(program_.num_lines) + " lines");
        }
        return static_cast<Line>(k);
    }

    GateStep parse_step(const std::vector<std::string_view> &words) const {
        if (words.size() < 2) {
            fail("'step' needs a gate name");
        }
        std::string_view gate = words[1];
        size_t refs = words.size() - 2;
        if (gate == "X") {
            if (refs != 1) fail("X takes 1 line, got " + std::to_string(refs));
        } else if (gate == "CX") {
            if (refs != 2) fail("CX takes 2 lines, got " + std::to_string(refs));
        } else if (gate == "CCX") {
            if (refs != 3) fail("CCX takes 3 lines, got " + std::to_string(refs));
        } else if (gate == "MCX") {
            if (refs < 1) fail("MCX needs at least a target line");
        } else {
            fail("unknown gate '" + std::string(gate) + "'");
        }

        GateStep step;
        for (size_t i = 2; i + 1 < words.size(); i++) {
            step.controls.push_back(parse_line_ref(words[i]));
        }
        step.target = parse_line_ref(words.back());
        if (auto violation = validate_step(step, program_.num_lines)) {
            fail(violation->description);
        }
        return step;
    }

    Program program_;
    Stage stage_ = Stage::Start;
    size_t line_no_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) {
    return Parser().parse(text);
}

std::string emit_step(const GateStep &step) {
    std::ostringstream out;
    out << "step ";
    switch (step.controls.size()) {
        case 0:
            out << "X";
            break;
        case 1:
            out << "CX";
            break;
        case 2:
            out << "CCX";
            break;
        default:
            out << "MCX";
            break;
    }
    for (Line c : step.controls) {
        out << " A" << c;
    }
    out << " A" << step.target;
    return out.str();
}

std::string emit_program(const Program &program) {
    std::ostringstream out;
    out << "lines " << program.num_lines << "\n";
    if (program.init) {
        out << "init " << format_address(*program.init, program.num_lines) << "\n";
    }
    if (program.pre_hadamard) {
        out << "pre hadamard\n";
    }
    for (const auto &step : program.steps) {
        out << emit_step(step) << "\n";
    }
    if (program.post_hadamard) {
        out << "post hadamard\n";
    }
    return out.str();
}

}  // namespace statcore
