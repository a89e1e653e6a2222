#ifndef STATCORE_COST_MODEL_H
#define STATCORE_COST_MODEL_H

#include <cstdint>
#include <string_view>

#include "statcore/gate_model.h"

namespace statcore {

/// Technology snapshot for sizing a wafer-scale core. Defaults describe a 32-bit address field.
struct TechParams {
    int64_t address_bits = 32;
    int64_t data_transistors = 2;
    int64_t cell_transistors_per_address_bit = 4;
    int64_t bus_transistors_per_address_bit = 3;
    double transistor_area = 0.01;  // square microns
    double wafer_radius = 20.0;     // cm
    double bus_distance = 40.0;     // cm
    double delay_per_cm = 8.0;      // ns / cm

    /// Throws std::invalid_argument unless every field is strictly positive and finite.
    void validate() const;

    /// Parses flat `key = value` lines (field names above, '#' comments) over the defaults.
    static TechParams parse_config(std::string_view text);
};

/// Words per 2^30 ("GW").
constexpr double kWordsPerGigaword = 1073741824.0;

struct CostReport {
    int64_t transistors_per_word = 0;
    uint64_t wafer_transistors = 0;
    uint64_t word_capacity = 0;
    double word_capacity_gw = 0;
    /// floor(log2(word_capacity)); zero when the wafer holds no word.
    int64_t address_space_bits = 0;
    double gate_delay_ns = 0;
    bool feasible = false;
};

int64_t word_cost(const TechParams &p);
double gate_delay(const TechParams &p);
CostReport wafer_report(const TechParams &p);

/// The address-bus hardware can only fire a step with at most two controls.
inline bool hardware_supported(const GateStep &step) {
    return step.controls.size() <= 2;
}

}  // namespace statcore

#endif
