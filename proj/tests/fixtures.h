#ifndef STATCORE_TESTS_FIXTURES_H
#define STATCORE_TESTS_FIXTURES_H

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "statcore/circuit_format.h"
#include "statcore/verify.h"

namespace statcore_test {

inline std::filesystem::path data_dir() {
    return STATCORE_TESTDATA_DIR;
}

inline std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct MalformedFixture {
    std::string name;
    std::string text;
    size_t expected_line;
};

/// Every file under data/malformed. The first line of each reads "# expect-line: N".
inline std::vector<MalformedFixture> malformed_fixtures() {
    std::vector<MalformedFixture> out;
    for (const auto &entry : std::filesystem::directory_iterator(data_dir() / "malformed")) {
        std::string text = read_text(entry.path());
        size_t line = std::stoul(text.substr(text.find(':') + 1));
        out.push_back({entry.path().filename().string(), text, line});
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.name < b.name; });
    return out;
}

inline statcore::Program random_program(std::mt19937_64 &rng, size_t max_lines, size_t max_steps) {
    using namespace statcore;
    Program p;
    p.num_lines = 1 + draw_below(rng, max_lines);
    if (draw_below(rng, 2)) {
        p.init = draw_below(rng, uint64_t{1} << p.num_lines);
    }
    p.pre_hadamard = draw_below(rng, 2);
    p.post_hadamard = draw_below(rng, 2);
    size_t steps = draw_below(rng, max_steps + 1);
    for (size_t i = 0; i < steps; i++) {
        p.steps.push_back(random_step(rng, p.num_lines, 5));
    }
    return p;
}

}  // namespace statcore_test

#endif
