#ifndef STATCORE_STATE_CORE_H
#define STATCORE_STATE_CORE_H

#include <cstdint>
#include <span>
#include <vector>

#include "statcore/gate_model.h"
#include "statcore/transforms.h"

namespace statcore {

/// Default cap on line count for a core. 2^28 words are allocated eagerly at the cap.
constexpr size_t kDefaultMaxLines = 28;

/// Amplitude of a resident word. Wider integers only exist outside the core.
enum class Trit : int8_t {
    Minus = -1,
    Zero = 0,
    Plus = 1,
};

/// Throws std::invalid_argument unless value is -1, 0 or +1.
Trit to_trit(int64_t value);

inline int64_t to_int(Trit t) {
    return static_cast<int64_t>(t);
}

/// One cell of core memory: a datum plus the address it currently answers to.
struct Word {
    Trit amp = Trit::Zero;
    Address tag = 0;

    bool operator==(const Word &other) const = default;
};

/// Data-stationary state vector.
///
/// Words are laid out once, with word i tagged i, and never move afterwards. A gate step rewrites
/// tags in place: every word whose tag has all control bits set flips the target bit of its tag.
/// The tags always form a permutation of 0..2^n-1, so readout can scatter by tag.
class StateCore {
   public:
    /// Basis state |index>: amplitude +1 at `index`, 0 elsewhere.
    static StateCore init_basis(size_t num_lines, Address index, size_t max_lines = kDefaultMaxLines);

    /// Loads an already pre-processed vector. Every entry must be a trit.
    static StateCore load_signs(size_t num_lines, std::span<const int64_t> values, size_t max_lines = kDefaultMaxLines);

    /// Flips the target tag bit of every word whose control tag bits are all 1.
    void apply_step(const GateStep &step);

    /// Values sorted into logical address order: result[t] is the amplitude of the word tagged t.
    LogicalVector readout() const;

    size_t num_lines() const {
        return num_lines_;
    }
    size_t size() const {
        return words_.size();
    }
    std::span<const Word> words() const {
        return words_;
    }

    bool operator==(const StateCore &other) const = default;

   private:
    StateCore(size_t num_lines, size_t max_lines);

    size_t num_lines_;
    std::vector<Word> words_;
};

/// Loads `start` into a core, applies every step of `circuit`, and reads it back out.
LogicalVector run_stationary(const Circuit &circuit, std::span<const int64_t> start, size_t max_lines = kDefaultMaxLines);

}  // namespace statcore

#endif
