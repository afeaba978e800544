// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "rdft/tensor.hpp"

namespace rdft {

enum class UnaryOp { Abs, Neg, Exp, Log, Sqrt, Cos, Sin, Tan, Sigmoid, Not };

enum class BinaryOp { Add, Minus, Mul, Div, Pow, Min, Max, Eq, Lt, Gt, And, Or, Xor };

enum class ReduceOp { Sum, Prod, Min, Max, Norm1, Norm2 };

enum class SimilarityKind { Cosine, Euclidean, Manhattan, Dot };

/// Right-aligned broadcast of two shapes: per axis the sizes must match or
/// one of them be 1; missing leading axes act as size 1. Throws
/// ShapeMismatchError when an axis pair is incompatible.
Shape broadcast_shapes(const Shape& a, const Shape& b);

/// Narrows an int64 intermediate to the given int dtype; throws
/// EvaluationError if the value does not fit.
std::int64_t narrow_int(Dtype dtype, std::int64_t value);

/// Rounds a float64 intermediate to the given float dtype (round to nearest
/// even for float16/float32); the rounded value is returned as a double.
double narrow_float(Dtype dtype, double value);

DataTensor elementwise_unary(UnaryOp op, const DataTensor& t);

DataTensor elementwise_binary(BinaryOp op, const DataTensor& a, const DataTensor& b);

/// Reduces one axis. The reduced axis is removed from the shape, so reducing
/// a rank-1 tensor yields a rank-0 scalar tensor.
DataTensor reduce(ReduceOp op, std::int64_t axis, const DataTensor& t);

DataTensor concat(std::int64_t axis, const DataTensor& a, const DataTensor& b);

/// Index range per axis, half-open [start, end).
using IndexRange = std::pair<std::int64_t, std::int64_t>;

DataTensor slice_ranges(const DataTensor& t, std::span<const IndexRange> ranges);

DataTensor slice_axis(const DataTensor& t, std::int64_t axis, std::int64_t start,
                      std::int64_t end);

/// Flattens both operands (identical shapes required) and computes the
/// measure in float64. Returns a plain double, not a tensor.
double similarity(SimilarityKind kind, const DataTensor& a, const DataTensor& b);

}  // namespace rdft
