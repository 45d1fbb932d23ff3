#pragma once

#include "tfrac/expr.hpp"
#include "tfrac/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tfrac {

struct ProblemFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed problem file: `key = value` lines, `#` comments, blank lines
/// ignored. Recognized keys: domain (interval|rectangle), L, Lx, Ly, alpha,
/// T, K, N, solver, u0, f, estimates (comma-separated ids).
struct ProblemFile {
    ProblemSpec spec;
    std::vector<std::string> estimates;
    std::uint64_t hash = 0;  // FNV-1a over the raw file bytes
    std::string source;      // raw text, kept for reports

    static ProblemFile load(const std::string& path);
    static ProblemFile parse(const std::string& text);
};

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace tfrac
