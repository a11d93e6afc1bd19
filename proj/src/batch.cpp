#include "steiner/batch.hpp"

#include <optional>

namespace steiner {

BatchResult evaluate_one(const TriangleInput& input) {
  try {
    return steiner_report(Triangle::make(input[0], input[1], input[2]));
  } catch (const GeometryError& e) {
    return BatchFailure{e.kind(), e.what()};
  }
}

std::vector<BatchResult> evaluate_batch_serial(std::span<const TriangleInput> inputs) {
  std::vector<BatchResult> out;
  out.reserve(inputs.size());
  for (const TriangleInput& in : inputs) out.push_back(evaluate_one(in));
  return out;
}

std::vector<BatchResult> evaluate_batch_parallel(std::span<const TriangleInput> inputs) {
  // BatchResult has no default state, so results land in optionals first.
  std::vector<std::optional<BatchResult>> slots(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    slots[static_cast<std::size_t>(i)].emplace(evaluate_one(inputs[static_cast<std::size_t>(i)]));
  }
  std::vector<BatchResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace steiner
