#include "hepadet/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace hepadet {

std::int64_t shape_numel(const Shape& shape) {
  std::int64_t n = 1;
  for (std::int64_t e : shape) {
    if (e < 0) throw std::invalid_argument("negative tensor extent in " + shape_str(shape));
    n *= e;
  }
  return n;
}

std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

Tensor::Tensor(Shape shape, double fill)
    : shape_(std::move(shape)), data_(static_cast<std::size_t>(shape_numel(shape_)), fill) {}

Tensor::Tensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_numel(shape_) != static_cast<std::int64_t>(data_.size())) {
    throw std::invalid_argument("tensor data length does not match shape " + shape_str(shape_));
  }
}

std::int64_t Tensor::dim(int axis) const {
  if (axis < 0 || axis >= rank()) throw std::out_of_range("tensor axis out of range");
  return shape_[static_cast<std::size_t>(axis)];
}

std::int64_t Tensor::flat_index(std::initializer_list<std::int64_t> idx) const {
  if (static_cast<int>(idx.size()) != rank()) {
    throw std::invalid_argument("index rank mismatch for shape " + shape_str(shape_));
  }
  std::int64_t flat = 0;
  int axis = 0;
  for (std::int64_t i : idx) {
    flat = flat * shape_[static_cast<std::size_t>(axis)] + i;
    ++axis;
  }
  return flat;
}

double Tensor::at(std::initializer_list<std::int64_t> idx) const {
  return data_[static_cast<std::size_t>(flat_index(idx))];
}

double& Tensor::at(std::initializer_list<std::int64_t> idx) {
  return data_[static_cast<std::size_t>(flat_index(idx))];
}

Tensor Tensor::reshaped(Shape new_shape) const {
  if (shape_numel(new_shape) != numel()) {
    throw std::invalid_argument("reshape " + shape_str(shape_) + " -> " + shape_str(new_shape) +
                                " changes element count");
  }
  Tensor out;
  out.shape_ = std::move(new_shape);
  out.data_ = data_;
  out.requires_grad_ = requires_grad_;
  return out;
}

void Tensor::fill(double value) {
  for (double& v : data_) v = value;
}

}  // namespace hepadet
