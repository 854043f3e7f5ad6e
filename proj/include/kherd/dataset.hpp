#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

namespace kherd {

using Index = Eigen::Index;

// Feature rows are stored row-major so a sample is contiguous in memory and
// maps directly onto the on-disk layout.
using FeatureMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// The ground set: n feature vectors of dimension d, with optional integer
// class labels (consumed only by the stratified baseline and the plot
// colouring).
struct Dataset {
  FeatureMatrix features;
  std::optional<std::vector<std::int32_t>> labels;

  Index n() const { return features.rows(); }
  Index d() const { return features.cols(); }
  bool has_labels() const { return labels.has_value(); }

  // Throws std::invalid_argument on empty shape, non-finite entries, or a
  // label vector whose length disagrees with n.
  void validate() const;
};

// Convenience constructor that validates before returning.
Dataset make_dataset(FeatureMatrix features,
                     std::optional<std::vector<std::int32_t>> labels = {});

}  // namespace kherd
