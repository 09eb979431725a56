// Copyright 2026 The simon-coherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simon_coherence/simon_circuit.h"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "simon_coherence/errors.h"
#include "simon_coherence/kernels.h"
#include "simon_coherence/rng.h"
#include "simon_coherence/tolerances.h"

namespace simon_coherence {

namespace {

constexpr int max_bits = 20;

void check_width(int n, const char *who) {
    if (n < 1 || n > max_bits) {
        throw DomainError(std::string(who) + ": n must lie in [1, " + std::to_string(max_bits) + "], got " +
                          std::to_string(n));
    }
}

std::vector<uint32_t> shuffled_prefix(int n, size_t count, Rng &rng) {
    size_t size = size_t{1} << n;
    std::vector<uint32_t> pool(size);
    std::iota(pool.begin(), pool.end(), 0u);
    for (size_t i = 0; i < count; i++) {
        size_t j = i + rng.uniform_below(size - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace

std::vector<uint32_t> SimonFunction::coset_representatives() const {
    std::vector<uint32_t> reps;
    uint32_t size = uint32_t{1} << n;
    for (uint32_t x = 0; x < size; x++) {
        if (s == 0 || x < (x ^ s)) {
            reps.push_back(x);
        }
    }
    return reps;
}

ValidationResult validate(const SimonFunction &f) {
    auto fail = [](std::string msg, std::optional<std::pair<uint32_t, uint32_t>> pair = std::nullopt) {
        return ValidationResult{false, pair, std::move(msg)};
    };
    if (f.n < 1 || f.n > max_bits) {
        return fail("bit width out of range");
    }
    uint32_t size = uint32_t{1} << f.n;
    if (f.table.size() != size) {
        return fail("table has " + std::to_string(f.table.size()) + " entries, expected " + std::to_string(size));
    }
    if (f.s >= size) {
        return fail("hidden string does not fit in n bits");
    }
    for (uint32_t x = 0; x < size; x++) {
        if (f.table[x] >= size) {
            return fail("f(" + to_bits(x, f.n) + ") does not fit in n bits");
        }
    }
    if (f.s != 0) {
        for (uint32_t x = 0; x < size; x++) {
            uint32_t partner = x ^ f.s;
            if (f.table[x] != f.table[partner]) {
                return fail("f(" + to_bits(x, f.n) + ") != f(" + to_bits(partner, f.n) + ")", std::pair{x, partner});
            }
        }
    }
    // Outside each {x, x ^ s} pair, images must be distinct.
    std::vector<int64_t> first_preimage(size, -1);
    for (uint32_t x = 0; x < size; x++) {
        int64_t &seen = first_preimage[f.table[x]];
        if (seen < 0) {
            seen = x;
        } else if (f.s == 0 || static_cast<uint32_t>(seen) != (x ^ f.s)) {
            auto other = static_cast<uint32_t>(seen);
            return fail("f(" + to_bits(other, f.n) + ") == f(" + to_bits(x, f.n) + ") but the inputs are not paired by s",
                        std::pair{other, x});
        }
    }
    return {};
}

SimonFunction random_two_to_one(int n, uint32_t s, uint64_t seed) {
    check_width(n, "random_two_to_one");
    if (s == 0) {
        throw DomainError("random_two_to_one: s must be nonzero (use random_bijection for s = 0)");
    }
    if (s >= (uint32_t{1} << n)) {
        throw DomainError("random_two_to_one: s does not fit in n bits");
    }
    SimonFunction f{n, std::vector<uint32_t>(size_t{1} << n), s};
    auto reps = f.coset_representatives();
    Rng rng(seed);
    auto images = shuffled_prefix(n, reps.size(), rng);
    for (size_t k = 0; k < reps.size(); k++) {
        f.table[reps[k]] = images[k];
        f.table[reps[k] ^ s] = images[k];
    }
    return f;
}

SimonFunction random_bijection(int n, uint64_t seed) {
    check_width(n, "random_bijection");
    Rng rng(seed);
    return SimonFunction{n, shuffled_prefix(n, size_t{1} << n, rng), 0};
}

StateVector oracle_apply(const StateVector &psi, std::span<const uint32_t> table, int n) {
    if (psi.n_first() != n || psi.n_second() != n || table.size() != (size_t{1} << n)) {
        throw DomainError("oracle_apply: registers hold " + std::to_string(psi.n_first()) + "+" +
                          std::to_string(psi.n_second()) + " qubits, oracle expects " + std::to_string(n) + "+" +
                          std::to_string(n));
    }
    std::vector<cplx> out(psi.dim());
    kernels::parallel::oracle_permute(psi.amps(), out, table, n);
    return StateVector(n, n, std::move(out));
}

std::string_view stage_name(StageLabel label) {
    switch (label) {
        case StageLabel::Initial:
            return "initial";
        case StageLabel::H:
            return "H";
        case StageLabel::HO:
            return "HO";
        case StageLabel::HOH:
            return "HOH";
        case StageLabel::PostMeasure:
            return "post_measure";
    }
    return "?";
}

std::map<StageLabel, StateVector> run_stages_unchecked(std::span<const uint32_t> table, int n) {
    std::map<StageLabel, StateVector> stages;
    auto initial = StateVector::basis(n, n, 0, 0);
    auto h = hadamard_first_register(initial);
    auto ho = oracle_apply(h, table, n);
    auto hoh = hadamard_first_register(ho);
    stages.emplace(StageLabel::Initial, std::move(initial));
    stages.emplace(StageLabel::H, std::move(h));
    stages.emplace(StageLabel::HO, std::move(ho));
    stages.emplace(StageLabel::HOH, std::move(hoh));
    return stages;
}

std::map<StageLabel, StateVector> run_stages(const SimonFunction &f) {
    if (auto v = validate(f); !v) {
        throw DomainError("run_stages: invalid Simon function: " + v.message);
    }
    return run_stages_unchecked(f.table, f.n);
}

StateVector hoh_from_cosets(const SimonFunction &f) {
    if (f.s == 0) {
        throw DomainError("hoh_from_cosets: requires a two-to-one function");
    }
    int n = f.n;
    uint32_t size = uint32_t{1} << n;
    double amplitude = std::ldexp(1.0, -(n - 1));
    std::vector<cplx> amps(size_t{1} << (2 * n));
    for (uint32_t x : f.coset_representatives()) {
        for (uint32_t y = 0; y < size; y++) {
            if (parity_dot(f.s, y) == 0) {
                amps[(size_t{y} << n) | f(x)] += parity_dot(x, y) ? -amplitude : amplitude;
            }
        }
    }
    return StateVector(n, n, std::move(amps));
}

Measurement measure_second_register(const StateVector &psi, const SimonFunction &f, uint64_t seed) {
    if (psi.n_first() != f.n || psi.n_second() != f.n) {
        throw DomainError("measure_second_register: register sizes do not match the oracle");
    }
    auto dist = second_register_distribution(psi);
    Rng rng(seed);
    auto observed = static_cast<uint32_t>(rng.sample(dist, Tolerances::probability_floor));
    double scale = 1 / std::sqrt(dist[observed]);
    std::vector<cplx> amps(psi.dim());
    uint32_t size = uint32_t{1} << f.n;
    for (uint32_t x = 0; x < size; x++) {
        size_t j = (size_t{x} << f.n) | observed;
        amps[j] = psi.amps()[j] * scale;
    }
    return Measurement{observed, StateVector(f.n, f.n, std::move(amps))};
}

std::string to_bits(uint32_t x, int n) {
    std::string out(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; i++) {
        if ((x >> (n - 1 - i)) & 1) {
            out[i] = '1';
        }
    }
    return out;
}

uint32_t from_bits(std::string_view bits) {
    if (bits.empty() || bits.size() > 32) {
        throw DomainError("bit string must have 1 to 32 characters");
    }
    uint32_t x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw DomainError("bit string '" + std::string(bits) + "' contains characters other than 0 and 1");
        }
        x = (x << 1) | static_cast<uint32_t>(c - '0');
    }
    return x;
}

void write_function_table(std::ostream &out, const SimonFunction &f) {
    out << "n=" << f.n << " s=" << to_bits(f.s, f.n) << "\n";
    for (uint32_t x = 0; x < f.table.size(); x++) {
        out << to_bits(x, f.n) << " " << to_bits(f.table[x], f.n) << "\n";
    }
}

SimonFunction read_function_table(std::istream &in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            line_no++;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                return true;
            }
        }
        return false;
    };

    if (!next_line()) {
        throw ParseError(1, "empty function table");
    }
    SimonFunction f;
    std::string s_bits;
    {
        std::istringstream header(line);
        std::string n_tok, s_tok, extra;
        header >> n_tok >> s_tok;
        if (n_tok.rfind("n=", 0) != 0 || s_tok.rfind("s=", 0) != 0 || (header >> extra)) {
            throw ParseError(line_no, "expected header 'n=<int> s=<bitstring>'");
        }
        try {
            size_t used = 0;
            f.n = std::stoi(n_tok.substr(2), &used);
            if (used != n_tok.size() - 2) {
                throw std::invalid_argument(n_tok);
            }
        } catch (const std::exception &) {
            throw ParseError(line_no, "bad bit width '" + n_tok.substr(2) + "'");
        }
        if (f.n < 1 || f.n > max_bits) {
            throw ParseError(line_no, "bit width must lie in [1, " + std::to_string(max_bits) + "]");
        }
        s_bits = s_tok.substr(2);
        if (s_bits.size() != static_cast<size_t>(f.n)) {
            throw ParseError(line_no, "hidden string must have exactly n bits");
        }
        try {
            f.s = from_bits(s_bits);
        } catch (const DomainError &e) {
            throw ParseError(line_no, e.what());
        }
    }

    uint32_t size = uint32_t{1} << f.n;
    f.table.resize(size);
    int first_row_line = 0;
    for (uint32_t x = 0; x < size; x++) {
        if (!next_line()) {
            throw ParseError(line_no + 1, "expected " + std::to_string(size) + " table rows, found " + std::to_string(x));
        }
        if (x == 0) {
            first_row_line = line_no;
        }
        std::istringstream row(line);
        std::string x_tok, fx_tok, extra;
        row >> x_tok >> fx_tok;
        if (x_tok.size() != static_cast<size_t>(f.n) || fx_tok.size() != static_cast<size_t>(f.n) || (row >> extra)) {
            throw ParseError(line_no, "expected '<x> <f(x)>' with two " + std::to_string(f.n) + "-bit strings");
        }
        try {
            if (from_bits(x_tok) != x) {
                throw ParseError(line_no, "rows must list x in ascending order; expected " + to_bits(x, f.n));
            }
            f.table[x] = from_bits(fx_tok);
        } catch (const DomainError &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (next_line()) {
        throw ParseError(line_no, "unexpected content after the last table row");
    }
    if (auto v = validate(f); !v) {
        int bad_line = v.violation ? first_row_line + static_cast<int>(v.violation->second) : 0;
        throw ParseError(bad_line, "not a valid Simon function: " + v.message);
    }
    return f;
}

}  // namespace simon_coherence
