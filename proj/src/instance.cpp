#include "resilmax/instance.hpp"

#include <string>

#include "resilmax/errors.hpp"

namespace resilmax {

Instance::Instance(GroundSet ground_, Objective objective_, Matroid matroid_,
                   int alpha_)
    : ground(std::move(ground_)),
      objective(std::move(objective_)),
      matroid(std::move(matroid_)),
      alpha(alpha_) {
  if (objective.ground_size() != ground.n) {
    throw InvalidArgumentError("objective covers " +
                               std::to_string(objective.ground_size()) +
                               " elements but the ground set has " +
                               std::to_string(ground.n));
  }
  if (matroid.ground_size() != ground.n) {
    throw InvalidArgumentError("matroid covers " +
                               std::to_string(matroid.ground_size()) +
                               " elements but the ground set has " +
                               std::to_string(ground.n));
  }
  if (alpha < 0) {
    throw InvalidArgumentError("alpha must be nonnegative");
  }
  if (!ground.labels.empty() &&
      static_cast<int>(ground.labels.size()) != ground.n) {
    throw InvalidArgumentError("labels must be empty or one per element");
  }
}

}  // namespace resilmax
