// SPDX-License-Identifier: Apache-2.0
#include "rdft/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "rdft/half.hpp"

namespace rdft {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw EvaluationError("integer overflow in add");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw EvaluationError("integer overflow in minus");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw EvaluationError("integer overflow in mul");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) {
        throw EvaluationError("integer overflow in neg");
    }
    return -a;
}

std::vector<std::int64_t> row_major_strides(const Shape& s) {
    std::vector<std::int64_t> strides(s.rank());
    std::int64_t acc = 1;
    for (std::size_t i = s.rank(); i-- > 0;) {
        strides[i] = acc;
        acc *= s.dim(i);
    }
    return strides;
}

// Strides of `operand` against a broadcast result of rank `result_rank`:
// missing leading axes and size-1 axes contribute stride 0.
std::vector<std::int64_t> broadcast_strides(const Shape& operand, std::size_t result_rank) {
    std::vector<std::int64_t> strides(result_rank, 0);
    auto own = row_major_strides(operand);
    std::size_t offset = result_rank - operand.rank();
    for (std::size_t i = 0; i < operand.rank(); ++i) {
        strides[offset + i] = operand.dim(i) == 1 ? 0 : own[i];
    }
    return strides;
}

// Walks the row-major index space of `shape`, tracking flat offsets into two
// operands with the given per-axis strides. Calls fn(offset_a, offset_b) for
// every result element in order.
template <typename Fn>
void for_each_broadcast(const Shape& shape, const std::vector<std::int64_t>& sa,
                        const std::vector<std::int64_t>& sb, Fn&& fn) {
    std::int64_t n = shape.element_count();
    std::size_t rank = shape.rank();
    std::vector<std::int64_t> idx(rank, 0);
    std::int64_t oa = 0, ob = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        fn(static_cast<std::size_t>(oa), static_cast<std::size_t>(ob));
        for (std::size_t ax = rank; ax-- > 0;) {
            ++idx[ax];
            oa += sa[ax];
            ob += sb[ax];
            if (idx[ax] < shape.dim(ax)) break;
            idx[ax] = 0;
            oa -= sa[ax] * shape.dim(ax);
            ob -= sb[ax] * shape.dim(ax);
        }
    }
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

bool is_comparison(BinaryOp op) {
    return op == BinaryOp::Eq || op == BinaryOp::Lt || op == BinaryOp::Gt;
}

bool is_logical(BinaryOp op) {
    return op == BinaryOp::And || op == BinaryOp::Or || op == BinaryOp::Xor;
}

const char* binary_op_name(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "add";
        case BinaryOp::Minus: return "minus";
        case BinaryOp::Mul: return "mul";
        case BinaryOp::Div: return "div";
        case BinaryOp::Pow: return "pow";
        case BinaryOp::Min: return "min";
        case BinaryOp::Max: return "max";
        case BinaryOp::Eq: return "eq";
        case BinaryOp::Lt: return "lt";
        case BinaryOp::Gt: return "gt";
        case BinaryOp::And: return "and";
        case BinaryOp::Or: return "or";
        case BinaryOp::Xor: return "xor";
    }
    return "?";
}

// Widest float dtype among the float-typed operands; Float64 when neither
// operand is float. This is the result dtype of div and pow.
Dtype widest_float_present(Dtype a, Dtype b) {
    if (is_float(a) && is_float(b)) return dtype_width_rank(a) >= dtype_width_rank(b) ? a : b;
    if (is_float(a)) return a;
    if (is_float(b)) return b;
    return Dtype::Float64;
}

void require_axis(const DataTensor& t, std::int64_t axis) {
    if (axis < 0 || static_cast<std::size_t>(axis) >= t.rank()) {
        throw ShapeMismatchError("axis " + std::to_string(axis) + " out of range for rank " +
                                 std::to_string(t.rank()));
    }
}

}  // namespace

Shape broadcast_shapes(const Shape& a, const Shape& b) {
    std::size_t rank = std::max(a.rank(), b.rank());
    std::vector<std::int64_t> dims(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        std::int64_t da = i < rank - a.rank() ? 1 : a.dim(i - (rank - a.rank()));
        std::int64_t db = i < rank - b.rank() ? 1 : b.dim(i - (rank - b.rank()));
        if (da == db || db == 1) {
            dims[i] = da;
        } else if (da == 1) {
            dims[i] = db;
        } else {
            throw ShapeMismatchError("cannot broadcast " + a.to_string() + " with " +
                                     b.to_string());
        }
    }
    return Shape(std::move(dims));
}

std::int64_t narrow_int(Dtype dtype, std::int64_t value) {
    switch (dtype) {
        case Dtype::Int16:
            if (value < -32768 || value > 32767) {
                throw EvaluationError("result " + std::to_string(value) +
                                      " does not fit int16");
            }
            return value;
        case Dtype::Int32:
            if (value < -2147483648LL || value > 2147483647LL) {
                throw EvaluationError("result " + std::to_string(value) +
                                      " does not fit int32");
            }
            return value;
        case Dtype::Int64:
            return value;
        default:
            throw DtypeMismatchError("narrow_int requires an int dtype");
    }
}

double narrow_float(Dtype dtype, double value) {
    switch (dtype) {
        case Dtype::Float16: return round_to_half(value);
        case Dtype::Float32: return round_to_float(value);
        case Dtype::Float64: return value;
        default: throw DtypeMismatchError("narrow_float requires a float dtype");
    }
}

DataTensor elementwise_unary(UnaryOp op, const DataTensor& t) {
    if (op == UnaryOp::Not) {
        if (!t.is_bool_class()) throw DtypeMismatchError("not requires a boolean tensor");
        DataTensor::BoolVec out(t.bool_data().begin(), t.bool_data().end());
        for (auto& b : out) b = b ? 0 : 1;
        return DataTensor::booleans(t.shape(), std::move(out));
    }
    if (t.is_bool_class()) {
        throw DtypeMismatchError("numeric unary op on a boolean tensor");
    }

    if (op == UnaryOp::Abs || op == UnaryOp::Neg) {
        if (t.is_int_class()) {
            DataTensor::IntVec out(t.int_data().begin(), t.int_data().end());
            for (auto& v : out) {
                v = op == UnaryOp::Neg ? checked_neg(v) : (v < 0 ? checked_neg(v) : v);
                v = narrow_int(t.dtype(), v);
            }
            return DataTensor::ints(t.dtype(), t.shape(), std::move(out));
        }
        DataTensor::FloatVec out(t.float_data().begin(), t.float_data().end());
        for (auto& v : out) v = op == UnaryOp::Neg ? -v : std::fabs(v);
        return DataTensor::floats(t.dtype(), t.shape(), std::move(out));
    }

    // exp/log/sqrt/cos/sin/tan/sigmoid: float64 for int inputs, else the
    // input float dtype. Computed in double, then narrowed.
    Dtype result_dtype = t.is_int_class() ? Dtype::Float64 : t.dtype();
    DataTensor::FloatVec out(static_cast<std::size_t>(t.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        double x = t.element_as_double(i);
        double y;
        switch (op) {
            case UnaryOp::Exp: y = std::exp(x); break;
            case UnaryOp::Log: y = std::log(x); break;
            case UnaryOp::Sqrt: y = std::sqrt(x); break;
            case UnaryOp::Cos: y = std::cos(x); break;
            case UnaryOp::Sin: y = std::sin(x); break;
            case UnaryOp::Tan: y = std::tan(x); break;
            case UnaryOp::Sigmoid: y = sigmoid(x); break;
            default: throw DtypeMismatchError("unreachable unary kind");
        }
        out[i] = narrow_float(result_dtype, y);
    }
    return DataTensor::floats(result_dtype, t.shape(), std::move(out));
}

DataTensor elementwise_binary(BinaryOp op, const DataTensor& a, const DataTensor& b) {
    if (is_logical(op)) {
        if (!a.is_bool_class() || !b.is_bool_class()) {
            throw DtypeMismatchError(std::string(binary_op_name(op)) +
                                     " requires two boolean tensors");
        }
    } else {
        if (a.is_bool_class() || b.is_bool_class()) {
            throw DtypeMismatchError(std::string(binary_op_name(op)) +
                                     " requires two numeric tensors");
        }
    }

    Shape shape = broadcast_shapes(a.shape(), b.shape());
    auto sa = broadcast_strides(a.shape(), shape.rank());
    auto sb = broadcast_strides(b.shape(), shape.rank());
    std::size_t n = static_cast<std::size_t>(shape.element_count());

    if (is_logical(op)) {
        auto da = a.bool_data();
        auto db = b.bool_data();
        DataTensor::BoolVec out(n);
        std::size_t w = 0;
        for_each_broadcast(shape, sa, sb, [&](std::size_t ia, std::size_t ib) {
            bool x = da[ia] != 0, y = db[ib] != 0;
            bool r;
            switch (op) {
                case BinaryOp::And: r = x && y; break;
                case BinaryOp::Or: r = x || y; break;
                default: r = x != y; break;  // xor
            }
            out[w++] = r ? 1 : 0;
        });
        return DataTensor::booleans(std::move(shape), std::move(out));
    }

    bool both_int = a.is_int_class() && b.is_int_class();

    if (is_comparison(op)) {
        DataTensor::BoolVec out(n);
        std::size_t w = 0;
        for_each_broadcast(shape, sa, sb, [&](std::size_t ia, std::size_t ib) {
            bool r;
            if (both_int) {
                std::int64_t x = a.int_data()[ia], y = b.int_data()[ib];
                r = op == BinaryOp::Eq ? x == y : op == BinaryOp::Lt ? x < y : x > y;
            } else {
                double x = a.element_as_double(ia), y = b.element_as_double(ib);
                r = op == BinaryOp::Eq ? x == y : op == BinaryOp::Lt ? x < y : x > y;
            }
            out[w++] = r ? 1 : 0;
        });
        return DataTensor::booleans(std::move(shape), std::move(out));
    }

    bool float_result = op == BinaryOp::Div || op == BinaryOp::Pow || !both_int;
    if (!float_result) {
        // int lane: 64-bit checked arithmetic, then narrowing.
        Dtype result_dtype = promote(a.dtype(), b.dtype());
        DataTensor::IntVec out(n);
        std::size_t w = 0;
        auto da = a.int_data();
        auto db = b.int_data();
        for_each_broadcast(shape, sa, sb, [&](std::size_t ia, std::size_t ib) {
            std::int64_t x = da[ia], y = db[ib];
            std::int64_t r;
            switch (op) {
                case BinaryOp::Add: r = checked_add(x, y); break;
                case BinaryOp::Minus: r = checked_sub(x, y); break;
                case BinaryOp::Mul: r = checked_mul(x, y); break;
                case BinaryOp::Min: r = std::min(x, y); break;
                default: r = std::max(x, y); break;
            }
            out[w++] = narrow_int(result_dtype, r);
        });
        return DataTensor::ints(result_dtype, std::move(shape), std::move(out));
    }

    Dtype result_dtype = (op == BinaryOp::Div || op == BinaryOp::Pow)
                             ? widest_float_present(a.dtype(), b.dtype())
                             : promote(a.dtype(), b.dtype());
    DataTensor::FloatVec out(n);
    std::size_t w = 0;
    for_each_broadcast(shape, sa, sb, [&](std::size_t ia, std::size_t ib) {
        double x = a.element_as_double(ia), y = b.element_as_double(ib);
        double r;
        switch (op) {
            case BinaryOp::Add: r = x + y; break;
            case BinaryOp::Minus: r = x - y; break;
            case BinaryOp::Mul: r = x * y; break;
            case BinaryOp::Div: r = x / y; break;
            case BinaryOp::Pow: r = std::pow(x, y); break;
            case BinaryOp::Min: r = std::fmin(x, y); break;
            default: r = std::fmax(x, y); break;
        }
        out[w++] = narrow_float(result_dtype, r);
    });
    return DataTensor::floats(result_dtype, std::move(shape), std::move(out));
}

DataTensor reduce(ReduceOp op, std::int64_t axis, const DataTensor& t) {
    if (t.is_bool_class()) throw DtypeMismatchError("reduce requires a numeric tensor");
    require_axis(t, axis);

    const auto& dims = t.shape().dims();
    std::int64_t axis_len = dims[static_cast<std::size_t>(axis)];
    std::int64_t outer = 1, inner = 1;
    for (std::int64_t i = 0; i < axis; ++i) outer *= dims[static_cast<std::size_t>(i)];
    for (std::size_t i = static_cast<std::size_t>(axis) + 1; i < dims.size(); ++i) {
        inner *= dims[i];
    }
    std::vector<std::int64_t> out_dims(dims);
    out_dims.erase(out_dims.begin() + static_cast<std::ptrdiff_t>(axis));
    Shape out_shape{std::move(out_dims)};

    bool norm = op == ReduceOp::Norm1 || op == ReduceOp::Norm2;
    bool int_lane = t.is_int_class() && !norm;
    Dtype result_dtype = norm ? (t.is_int_class() ? Dtype::Float64 : t.dtype()) : t.dtype();

    if (axis_len == 0 && outer * inner > 0 && (op == ReduceOp::Min || op == ReduceOp::Max)) {
        throw EvaluationError("min/max over an empty axis");
    }

    auto source_index = [&](std::int64_t o, std::int64_t k, std::int64_t i) {
        return static_cast<std::size_t>((o * axis_len + k) * inner + i);
    };

    if (int_lane) {
        DataTensor::IntVec out(static_cast<std::size_t>(outer * inner));
        auto data = t.int_data();
        std::size_t w = 0;
        for (std::int64_t o = 0; o < outer; ++o) {
            for (std::int64_t i = 0; i < inner; ++i) {
                std::int64_t acc = op == ReduceOp::Prod ? 1 : 0;
                if (op == ReduceOp::Min || op == ReduceOp::Max) {
                    acc = data[source_index(o, 0, i)];
                }
                for (std::int64_t k = (op == ReduceOp::Min || op == ReduceOp::Max) ? 1 : 0;
                     k < axis_len; ++k) {
                    std::int64_t v = data[source_index(o, k, i)];
                    switch (op) {
                        case ReduceOp::Sum: acc = checked_add(acc, v); break;
                        case ReduceOp::Prod: acc = checked_mul(acc, v); break;
                        case ReduceOp::Min: acc = std::min(acc, v); break;
                        default: acc = std::max(acc, v); break;
                    }
                }
                out[w++] = narrow_int(result_dtype, acc);
            }
        }
        return DataTensor::ints(result_dtype, std::move(out_shape), std::move(out));
    }

    DataTensor::FloatVec out(static_cast<std::size_t>(outer * inner));
    std::size_t w = 0;
    for (std::int64_t o = 0; o < outer; ++o) {
        for (std::int64_t i = 0; i < inner; ++i) {
            double acc;
            std::int64_t k0 = 0;
            switch (op) {
                case ReduceOp::Sum:
                case ReduceOp::Norm1:
                case ReduceOp::Norm2: acc = 0.0; break;
                case ReduceOp::Prod: acc = 1.0; break;
                default:
                    acc = t.element_as_double(source_index(o, 0, i));
                    k0 = 1;
                    break;
            }
            for (std::int64_t k = k0; k < axis_len; ++k) {
                double v = t.element_as_double(source_index(o, k, i));
                switch (op) {
                    case ReduceOp::Sum: acc += v; break;
                    case ReduceOp::Prod: acc *= v; break;
                    case ReduceOp::Min: acc = std::fmin(acc, v); break;
                    case ReduceOp::Max: acc = std::fmax(acc, v); break;
                    case ReduceOp::Norm1: acc += std::fabs(v); break;
                    case ReduceOp::Norm2: acc += v * v; break;
                }
            }
            if (op == ReduceOp::Norm2) acc = std::sqrt(acc);
            out[w++] = narrow_float(result_dtype, acc);
        }
    }
    return DataTensor::floats(result_dtype, std::move(out_shape), std::move(out));
}

DataTensor concat(std::int64_t axis, const DataTensor& a, const DataTensor& b) {
    if (a.rank() != b.rank()) {
        throw ShapeMismatchError("concat rank mismatch: " + a.shape().to_string() + " vs " +
                                 b.shape().to_string());
    }
    if (a.rank() == 0) throw ShapeMismatchError("concat requires rank >= 1");
    require_axis(a, axis);
    if (a.is_bool_class() != b.is_bool_class()) {
        throw DtypeMismatchError("concat cannot mix numeric and boolean tensors");
    }
    for (std::size_t i = 0; i < a.rank(); ++i) {
        if (i != static_cast<std::size_t>(axis) && a.shape().dim(i) != b.shape().dim(i)) {
            throw ShapeMismatchError("concat dimension mismatch at axis " + std::to_string(i));
        }
    }

    std::vector<std::int64_t> dims = a.shape().dims();
    dims[static_cast<std::size_t>(axis)] += b.shape().dim(static_cast<std::size_t>(axis));
    Shape out_shape{std::move(dims)};

    std::int64_t inner = 1;
    for (std::size_t i = static_cast<std::size_t>(axis) + 1; i < a.rank(); ++i) {
        inner *= a.shape().dim(i);
    }
    std::int64_t outer = 1;
    for (std::int64_t i = 0; i < axis; ++i) outer *= a.shape().dim(static_cast<std::size_t>(i));
    std::int64_t block_a = a.shape().dim(static_cast<std::size_t>(axis)) * inner;
    std::int64_t block_b = b.shape().dim(static_cast<std::size_t>(axis)) * inner;

    if (a.is_bool_class()) {
        DataTensor::BoolVec out;
        out.reserve(static_cast<std::size_t>(outer * (block_a + block_b)));
        auto da = a.bool_data();
        auto db = b.bool_data();
        for (std::int64_t o = 0; o < outer; ++o) {
            out.insert(out.end(), da.begin() + o * block_a, da.begin() + (o + 1) * block_a);
            out.insert(out.end(), db.begin() + o * block_b, db.begin() + (o + 1) * block_b);
        }
        return DataTensor::booleans(std::move(out_shape), std::move(out));
    }

    Dtype result_dtype = promote(a.dtype(), b.dtype());
    if (is_int(result_dtype)) {
        DataTensor::IntVec out;
        out.reserve(static_cast<std::size_t>(outer * (block_a + block_b)));
        auto da = a.int_data();
        auto db = b.int_data();
        for (std::int64_t o = 0; o < outer; ++o) {
            out.insert(out.end(), da.begin() + o * block_a, da.begin() + (o + 1) * block_a);
            out.insert(out.end(), db.begin() + o * block_b, db.begin() + (o + 1) * block_b);
        }
        return DataTensor::ints(result_dtype, std::move(out_shape), std::move(out));
    }

    DataTensor::FloatVec out;
    out.reserve(static_cast<std::size_t>(outer * (block_a + block_b)));
    auto push = [&](const DataTensor& t, std::int64_t from, std::int64_t count) {
        for (std::int64_t k = 0; k < count; ++k) {
            out.push_back(
                narrow_float(result_dtype, t.element_as_double(static_cast<std::size_t>(from + k))));
        }
    };
    for (std::int64_t o = 0; o < outer; ++o) {
        push(a, o * block_a, block_a);
        push(b, o * block_b, block_b);
    }
    return DataTensor::floats(result_dtype, std::move(out_shape), std::move(out));
}

DataTensor slice_ranges(const DataTensor& t, std::span<const IndexRange> ranges) {
    if (ranges.size() != t.rank()) {
        throw ShapeMismatchError("expected " + std::to_string(t.rank()) + " ranges, got " +
                                 std::to_string(ranges.size()));
    }
    std::vector<std::int64_t> dims(t.rank());
    for (std::size_t i = 0; i < t.rank(); ++i) {
        auto [start, end] = ranges[i];
        if (start < 0 || end > t.shape().dim(i)) {
            throw ShapeMismatchError("range [" + std::to_string(start) + "," +
                                     std::to_string(end) + ") out of bounds for axis " +
                                     std::to_string(i));
        }
        if (start > end) {
            throw ShapeMismatchError("range start " + std::to_string(start) +
                                     " exceeds end " + std::to_string(end));
        }
        dims[i] = end - start;
    }
    Shape out_shape{std::move(dims)};

    auto strides = row_major_strides(t.shape());
    std::int64_t base = 0;
    for (std::size_t i = 0; i < t.rank(); ++i) base += ranges[i].first * strides[i];

    std::size_t n = static_cast<std::size_t>(out_shape.element_count());
    std::vector<std::size_t> src(n);
    {
        std::size_t rank = out_shape.rank();
        std::vector<std::int64_t> idx(rank, 0);
        std::int64_t off = base;
        for (std::size_t i = 0; i < n; ++i) {
            src[i] = static_cast<std::size_t>(off);
            for (std::size_t ax = rank; ax-- > 0;) {
                ++idx[ax];
                off += strides[ax];
                if (idx[ax] < out_shape.dim(ax)) break;
                idx[ax] = 0;
                off -= strides[ax] * out_shape.dim(ax);
            }
        }
    }

    if (t.is_bool_class()) {
        DataTensor::BoolVec out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = t.bool_data()[src[i]];
        return DataTensor::booleans(std::move(out_shape), std::move(out));
    }
    if (t.is_int_class()) {
        DataTensor::IntVec out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = t.int_data()[src[i]];
        return DataTensor::ints(t.dtype(), std::move(out_shape), std::move(out));
    }
    DataTensor::FloatVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = t.float_data()[src[i]];
    return DataTensor::floats(t.dtype(), std::move(out_shape), std::move(out));
}

DataTensor slice_axis(const DataTensor& t, std::int64_t axis, std::int64_t start,
                      std::int64_t end) {
    require_axis(t, axis);
    std::vector<IndexRange> ranges(t.rank());
    for (std::size_t i = 0; i < t.rank(); ++i) ranges[i] = {0, t.shape().dim(i)};
    ranges[static_cast<std::size_t>(axis)] = {start, end};
    return slice_ranges(t, ranges);
}

double similarity(SimilarityKind kind, const DataTensor& a, const DataTensor& b) {
    if (a.is_bool_class() || b.is_bool_class()) {
        throw DtypeMismatchError("similarity requires numeric tensors");
    }
    if (a.shape() != b.shape()) {
        throw ShapeMismatchError("similarity shape mismatch: " + a.shape().to_string() +
                                 " vs " + b.shape().to_string());
    }
    std::size_t n = static_cast<std::size_t>(a.size());
    if (n == 0) throw EvaluationError("similarity over empty tensors");

    switch (kind) {
        case SimilarityKind::Dot: {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += a.element_as_double(i) * b.element_as_double(i);
            }
            return acc;
        }
        case SimilarityKind::Cosine: {
            double dot = 0.0, na = 0.0, nb = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double x = a.element_as_double(i), y = b.element_as_double(i);
                dot += x * y;
                na += x * x;
                nb += y * y;
            }
            if (na == 0.0 || nb == 0.0) {
                throw EvaluationError("cosine similarity with a zero-norm operand");
            }
            return dot / (std::sqrt(na) * std::sqrt(nb));
        }
        case SimilarityKind::Euclidean: {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double d = a.element_as_double(i) - b.element_as_double(i);
                acc += d * d;
            }
            return std::sqrt(acc);
        }
        case SimilarityKind::Manhattan: {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += std::fabs(a.element_as_double(i) - b.element_as_double(i));
            }
            return acc;
        }
    }
    throw EvaluationError("unreachable similarity kind");
}

}  // namespace rdft
