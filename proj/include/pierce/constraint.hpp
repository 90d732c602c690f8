// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/bigint.hpp"
#include "pierce/errors.hpp"

namespace pierce {

/// Admissible digits at one expansion level.
struct LevelSet {
    enum class Kind { All, Range, Tail, Explicit };

    Kind kind = Kind::All;
    BigInt bound;               // Range: digits 1..bound; Tail: digits > bound
    std::vector<BigInt> elems;  // Explicit: sorted, deduplicated

    static LevelSet all() { return LevelSet{Kind::All, 0, {}}; }
    static LevelSet range(BigInt m) {
        if (m < 1) throw ValidationError("range bound must be >= 1");
        return LevelSet{Kind::Range, std::move(m), {}};
    }
    static LevelSet tail(BigInt v) {
        if (v < 1) throw ValidationError("tail bound must be >= 1");
        return LevelSet{Kind::Tail, std::move(v), {}};
    }
    static LevelSet explicit_set(std::vector<BigInt> elems) {
        for (const BigInt& e : elems)
            if (e < 1) throw ValidationError("set element must be >= 1");
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        return LevelSet{Kind::Explicit, 0, std::move(elems)};
    }

    bool unbounded() const { return kind == Kind::All || kind == Kind::Tail; }
    bool empty() const { return kind == Kind::Explicit && elems.empty(); }

    // largest digit of a finite level; only meaningful when !unbounded()
    BigInt max_finite() const {
        if (kind == Kind::Range) return bound;
        if (kind == Kind::Explicit && !elems.empty()) return elems.back();
        return 0;
    }

    bool admits(const BigInt& digit) const {
        switch (kind) {
            case Kind::All: return digit >= 1;
            case Kind::Range: return digit >= 1 && digit <= bound;
            case Kind::Tail: return digit > bound;
            case Kind::Explicit:
                return std::binary_search(elems.begin(), elems.end(), digit);
        }
        return false;
    }
};

/// Per-level digit restrictions with a stationary tail: the last specified
/// level repeats for all deeper positions.
class DigitConstraint {
public:
    explicit DigitConstraint(std::vector<LevelSet> levels) : levels_(std::move(levels)) {
        if (levels_.empty()) throw ValidationError("constraint needs at least one level");
    }

    // one level per line: "all" | "range:m" | "tail:v" | "set:a,b,c"
    static DigitConstraint parse_text(std::string_view text) {
        std::vector<LevelSet> levels;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            levels.push_back(parse_line(line));
        }
        if (levels.empty()) throw ValidationError("constraint file has no levels");
        return DigitConstraint(std::move(levels));
    }

    static DigitConstraint parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open constraint file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_text(buf.str());
    }

    // 1-based level access with the stationary-tail rule
    const LevelSet& level(std::uint64_t k) const {
        if (k == 0) throw ValidationError("levels are 1-based");
        return k <= levels_.size() ? levels_[k - 1] : levels_.back();
    }

    std::size_t explicit_levels() const { return levels_.size(); }

private:
    static LevelSet parse_line(const std::string& line) {
        if (line == "all") return LevelSet::all();
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ValidationError("bad constraint line: '" + line + "'");
        std::string kind = line.substr(0, colon);
        std::string arg = line.substr(colon + 1);
        auto parse_positive = [&](const std::string& s) -> BigInt {
            if (s.empty()) throw ValidationError("missing number in constraint line");
            for (char c : s)
                if (c < '0' || c > '9')
                    throw ValidationError("bad number in constraint line: '" + s + "'");
            return BigInt(s);
        };
        if (kind == "range") return LevelSet::range(parse_positive(arg));
        if (kind == "tail") return LevelSet::tail(parse_positive(arg));
        if (kind == "set") {
            std::vector<BigInt> elems;
            std::size_t pos = 0;
            while (pos < arg.size()) {
                std::size_t comma = arg.find(',', pos);
                std::size_t end = comma == std::string::npos ? arg.size() : comma;
                elems.push_back(parse_positive(arg.substr(pos, end - pos)));
                pos = comma == std::string::npos ? arg.size() : comma + 1;
            }
            return LevelSet::explicit_set(std::move(elems));
        }
        throw ValidationError("unknown constraint kind: '" + kind + "'");
    }

    std::vector<LevelSet> levels_;
};

}  // namespace pierce
