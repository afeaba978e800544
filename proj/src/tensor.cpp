// SPDX-License-Identifier: Apache-2.0
#include "rdft/tensor.hpp"

#include <cmath>
#include <limits>

#include "rdft/half.hpp"

namespace rdft {

namespace {

void check_int_range(Dtype dtype, std::span<const std::int64_t> data) {
    std::int64_t lo, hi;
    switch (dtype) {
        case Dtype::Int16: lo = -32768; hi = 32767; break;
        case Dtype::Int32: lo = -2147483648LL; hi = 2147483647LL; break;
        case Dtype::Int64: return;
        default: throw DtypeMismatchError("integer payload requires an int dtype");
    }
    for (std::int64_t v : data) {
        if (v < lo || v > hi) {
            throw EvaluationError("value " + std::to_string(v) + " out of range for " +
                                  std::string(dtype_tag(dtype)));
        }
    }
}

void check_float_repr(Dtype dtype, std::span<const double> data) {
    switch (dtype) {
        case Dtype::Float64:
            return;
        case Dtype::Float32:
            for (double v : data) {
                if (!is_float_value(v)) {
                    throw EvaluationError("value not exactly representable as float32");
                }
            }
            return;
        case Dtype::Float16:
            for (double v : data) {
                if (!is_half_value(v)) {
                    throw EvaluationError("value not exactly representable as float16");
                }
            }
            return;
        default:
            throw DtypeMismatchError("float payload requires a float dtype");
    }
}

}  // namespace

DataTensor::DataTensor(Dtype dtype, Shape shape, std::variant<IntVec, FloatVec, BoolVec> data)
    : dtype_(dtype), shape_(std::move(shape)), data_(std::move(data)) {
    std::int64_t expected = shape_.element_count();
    if (expected > kMaxElements) {
        throw ShapeMismatchError("tensor exceeds the 2^31-1 element limit");
    }
    std::size_t actual = std::visit([](const auto& v) { return v.size(); }, data_);
    if (actual != static_cast<std::size_t>(expected)) {
        throw ShapeMismatchError("data length " + std::to_string(actual) +
                                 " does not match shape element count " +
                                 std::to_string(expected));
    }
    element_count_ = actual;
}

DataTensor DataTensor::ints(Dtype dtype, Shape shape, IntVec data) {
    check_int_range(dtype, data);
    return DataTensor(dtype, std::move(shape), std::move(data));
}

DataTensor DataTensor::floats(Dtype dtype, Shape shape, FloatVec data) {
    check_float_repr(dtype, data);
    return DataTensor(dtype, std::move(shape), std::move(data));
}

DataTensor DataTensor::booleans(Shape shape, BoolVec data) {
    for (auto& b : data) b = b ? 1 : 0;
    return DataTensor(Dtype::Bool, std::move(shape), std::move(data));
}

DataTensor DataTensor::scalar_int(Dtype dtype, std::int64_t value) {
    return ints(dtype, Shape{}, IntVec{value});
}

DataTensor DataTensor::scalar_float(Dtype dtype, double value) {
    return floats(dtype, Shape{}, FloatVec{value});
}

double DataTensor::element_as_double(std::size_t i) const {
    if (is_int_class()) return static_cast<double>(int_data()[i]);
    if (is_float_class()) return float_data()[i];
    throw DtypeMismatchError("boolean tensor has no numeric elements");
}

}  // namespace rdft
