#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steerlab {

// Config/schema problems (CLI exit code 2).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data, file-format and shape problems (CLI exit code 3).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// splitmix64 step; derives decorrelated substreams from one base seed so that
// parallel generators stay reproducible.
uint64_t mix_seed(uint64_t base, uint64_t stream);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double vector_norm(const std::vector<double>& v);

// 0 when either argument has zero norm; callers that care flag that case.
double cosine(const std::vector<double>& a, const std::vector<double>& b);

// Deterministic pairwise (divide-and-conquer) sum of equal-length vectors.
// The reduction order is fixed regardless of how the terms were produced.
std::vector<double> pairwise_vector_sum(const std::vector<std::vector<double>>& terms);

uint64_t fnv1a64(const void* data, std::size_t n, uint64_t h = 1469598103934665603ull);
uint64_t fnv1a64_str(const std::string& s, uint64_t h = 1469598103934665603ull);

bool approx_rel(double a, double b, double rel_tol, double abs_floor = 1e-12);

}  // namespace steerlab
