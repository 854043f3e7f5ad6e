#include "kherd/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kherd {

void Dataset::validate() const {
  if (features.rows() < 1 || features.cols() < 1) {
    throw std::invalid_argument("dataset must have n >= 1 and d >= 1");
  }
  for (Index i = 0; i < features.rows(); ++i) {
    for (Index j = 0; j < features.cols(); ++j) {
      if (!std::isfinite(features(i, j))) {
        throw std::invalid_argument("non-finite feature value at row " +
                                    std::to_string(i));
      }
    }
  }
  if (labels && static_cast<Index>(labels->size()) != features.rows()) {
    throw std::invalid_argument("label count does not match sample count");
  }
}

Dataset make_dataset(FeatureMatrix features,
                     std::optional<std::vector<std::int32_t>> labels) {
  Dataset ds{std::move(features), std::move(labels)};
  ds.validate();
  return ds;
}

}  // namespace kherd
