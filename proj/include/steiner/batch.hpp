#pragma once

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/steiner.hpp"

namespace steiner {

using TriangleInput = std::array<Complex, 3>;

struct BatchFailure {
  ErrorKind kind;
  std::string message;
};

using BatchResult = std::variant<SteinerReport, BatchFailure>;

// Reference implementation: one triangle after another.
std::vector<BatchResult> evaluate_batch_serial(std::span<const TriangleInput> inputs);

// OpenMP version of evaluate_batch_serial. Entries are independent, so the
// output is identical to the serial one, element by element.
std::vector<BatchResult> evaluate_batch_parallel(std::span<const TriangleInput> inputs);

// Runs the pipeline for a single input, capturing geometry errors.
BatchResult evaluate_one(const TriangleInput& input);

}  // namespace steiner
