// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rdft/dtype.hpp"
#include "rdft/shape.hpp"

namespace rdft {

/// Immutable dense n-dimensional value: dtype, shape, row-major payload.
///
/// Elements are stored widened: every int dtype as int64, every float dtype
/// as double, booleans as bytes. The construction invariant is that each
/// stored element is exactly representable in the declared dtype (range
/// checks for ints, exact binary16/binary32 round-trips for the narrow
/// floats). NaN and infinities may live inside a tensor; they only become
/// an error at serialization time.
class DataTensor {
public:
    using IntVec = std::vector<std::int64_t>;
    using FloatVec = std::vector<double>;
    using BoolVec = std::vector<std::uint8_t>;

    /// Largest supported element count (2^31 - 1).
    static constexpr std::int64_t kMaxElements = 2147483647;

    static DataTensor ints(Dtype dtype, Shape shape, IntVec data);
    static DataTensor floats(Dtype dtype, Shape shape, FloatVec data);
    static DataTensor booleans(Shape shape, BoolVec data);

    /// Rank-0 convenience constructors.
    static DataTensor scalar_int(Dtype dtype, std::int64_t value);
    static DataTensor scalar_float(Dtype dtype, double value);

    Dtype dtype() const { return dtype_; }
    const Shape& shape() const { return shape_; }
    std::size_t rank() const { return shape_.rank(); }
    std::int64_t size() const { return static_cast<std::int64_t>(element_count_); }

    bool is_int_class() const { return is_int(dtype_); }
    bool is_float_class() const { return is_float(dtype_); }
    bool is_bool_class() const { return dtype_ == Dtype::Bool; }

    std::span<const std::int64_t> int_data() const {
        return std::get<IntVec>(data_);
    }
    std::span<const double> float_data() const {
        return std::get<FloatVec>(data_);
    }
    std::span<const std::uint8_t> bool_data() const {
        return std::get<BoolVec>(data_);
    }

    /// Numeric element widened to double (ints may lose precision above 2^53).
    double element_as_double(std::size_t i) const;

    /// Value equality: same dtype, same shape, elementwise identical payload
    /// (NaN != NaN, as usual for floats).
    bool operator==(const DataTensor& other) const = default;

private:
    DataTensor(Dtype dtype, Shape shape, std::variant<IntVec, FloatVec, BoolVec> data);

    Dtype dtype_ = Dtype::Bool;
    Shape shape_;
    std::size_t element_count_ = 0;
    std::variant<IntVec, FloatVec, BoolVec> data_;
};

}  // namespace rdft
