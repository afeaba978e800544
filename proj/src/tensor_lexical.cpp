// SPDX-License-Identifier: Apache-2.0
#include "rdft/tensor_lexical.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdft/half.hpp"
#include "rdft/tensor_ops.hpp"

namespace rdft {

namespace {

constexpr double kFloat32Max = 3.4028234663852886e38;

struct DataToken {
    enum class Kind { Int, BigUint, Float, Bool, Other };
    Kind kind = Kind::Other;
    std::int64_t i = 0;
    std::uint64_t u = 0;
    double f = 0.0;
    bool b = false;
    bool integral_repr = false;  // float token whose lexeme had no '.' or exponent
    const char* desc = "";       // for "Other": null, string, array, object
};

struct ShapeEntry {
    bool is_int = false;
    bool negative = false;
    std::int64_t value = 0;
    const char* desc = "";
};

// Streaming analysis of the lexical form. Structural facts and issues are
// collected without aborting so validate() can report everything at once.
class TensorSaxHandler {
public:
    explicit TensorSaxHandler(bool boolean_datatype) : boolean_(boolean_datatype) {}

    bool null() { return value("null"); }

    bool boolean(bool val) {
        if (skip_depth_ > 0) return true;
        if (where_ == Where::InData) {
            DataToken t;
            t.kind = DataToken::Kind::Bool;
            t.b = val;
            data_.push_back(t);
            return true;
        }
        return value("a boolean");
    }

    bool number_integer(std::int64_t val) { return number(val, false, 0, "an integer"); }

    bool number_unsigned(std::uint64_t val) {
        if (val <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            return number(static_cast<std::int64_t>(val), false, 0, "an integer");
        }
        return number(0, true, val, "an integer");
    }

    bool number_float(double val, const std::string& lexeme) {
        if (skip_depth_ > 0) return true;
        bool integral = lexeme.find_first_of(".eE") == std::string::npos;
        if (where_ == Where::InShape) {
            ShapeEntry e;
            e.desc = "a non-integer number";
            shape_.push_back(e);
            return true;
        }
        if (where_ == Where::InData) {
            DataToken t;
            t.kind = DataToken::Kind::Float;
            t.f = val;
            t.integral_repr = integral;
            data_.push_back(t);
            return true;
        }
        return value("a number");
    }

    bool string(std::string& val) {
        if (skip_depth_ > 0) return true;
        if (where_ == Where::Root && pending_ == Pending::Type) {
            type_value_ = val;
            pending_ = Pending::None;
            return true;
        }
        return value("a string");
    }

    bool binary(nlohmann::json::binary_t&) { return value("binary data"); }

    bool start_object(std::size_t) {
        if (skip_depth_ > 0) {
            ++skip_depth_;
            return true;
        }
        if (where_ == Where::Start) {
            where_ = Where::Root;
            root_is_object_ = true;
            return true;
        }
        bool ok = value("an object");
        ++skip_depth_;  // consume the nested object
        return ok;
    }

    bool key(std::string& val) {
        if (skip_depth_ > 0) return true;
        current_key_ = val;
        if (val == "type" && !boolean_) {
            if (seen_type_) {
                issue("duplicate-key", "duplicate key `type`", "$");
                pending_ = Pending::Skip;
            } else {
                seen_type_ = true;
                pending_ = Pending::Type;
            }
        } else if (val == "shape") {
            if (seen_shape_) {
                issue("duplicate-key", "duplicate key `shape`", "$");
                pending_ = Pending::Skip;
            } else {
                seen_shape_ = true;
                pending_ = Pending::Shape;
            }
        } else if (val == "data") {
            if (seen_data_) {
                issue("duplicate-key", "duplicate key `data`", "$");
                pending_ = Pending::Skip;
            } else {
                seen_data_ = true;
                pending_ = Pending::Data;
            }
        } else {
            issue("unexpected-key", "unexpected key `" + val + "`", "$." + val);
            pending_ = Pending::Skip;
        }
        return true;
    }

    bool end_object() {
        if (skip_depth_ > 0) {
            --skip_depth_;
            return true;
        }
        where_ = Where::Done;
        return true;
    }

    bool start_array(std::size_t) {
        if (skip_depth_ > 0) {
            ++skip_depth_;
            return true;
        }
        if (where_ == Where::Root && pending_ == Pending::Shape) {
            where_ = Where::InShape;
            shape_is_array_ = true;
            pending_ = Pending::None;
            return true;
        }
        if (where_ == Where::Root && pending_ == Pending::Data) {
            where_ = Where::InData;
            data_is_array_ = true;
            pending_ = Pending::None;
            return true;
        }
        bool ok = value("an array");
        ++skip_depth_;
        return ok;
    }

    bool end_array() {
        if (skip_depth_ > 0) {
            --skip_depth_;
            return true;
        }
        where_ = Where::Root;
        return true;
    }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) {
        syntax_error_ = std::string(ex.what());
        syntax_position_ = position;
        return false;
    }

    // --- analysis results ---

    bool root_is_object_ = false;
    bool seen_type_ = false, seen_shape_ = false, seen_data_ = false;
    bool shape_is_array_ = false, data_is_array_ = false;
    std::optional<std::string> type_value_;  // set only when `type` was a string
    bool type_was_nonstring_ = false;
    std::vector<ShapeEntry> shape_;
    std::vector<DataToken> data_;
    std::vector<ValidationIssue> issues_;
    std::optional<std::string> syntax_error_;
    std::size_t syntax_position_ = 0;

private:
    enum class Where { Start, Root, InShape, InData, Done };
    enum class Pending { None, Type, Shape, Data, Skip };

    void issue(std::string code, std::string message, std::string path) {
        issues_.push_back({std::move(code), std::move(message), std::move(path)});
    }

    bool number(std::int64_t i, bool big_uint, std::uint64_t u, const char* desc) {
        if (skip_depth_ > 0) return true;
        if (where_ == Where::InShape) {
            ShapeEntry e;
            e.is_int = !big_uint;
            e.negative = !big_uint && i < 0;
            e.value = i;
            if (big_uint) {
                e.is_int = true;  // non-negative, but beyond any valid dimension
                e.value = std::numeric_limits<std::int64_t>::max();
            }
            shape_.push_back(e);
            return true;
        }
        if (where_ == Where::InData) {
            DataToken t;
            t.kind = big_uint ? DataToken::Kind::BigUint : DataToken::Kind::Int;
            t.i = i;
            t.u = u;
            data_.push_back(t);
            return true;
        }
        return value(desc);
    }

    // A scalar landed somewhere it does not belong.
    bool value(const char* desc) {
        if (skip_depth_ > 0) return true;
        switch (where_) {
            case Where::Start:
                issue("root-not-object", std::string("root must be a JSON object, found ") + desc,
                      "$");
                return false;  // nothing else to learn
            case Where::InShape: {
                ShapeEntry e;
                e.desc = desc;
                shape_.push_back(e);
                return true;
            }
            case Where::InData: {
                DataToken t;
                t.desc = desc;
                data_.push_back(t);
                return true;
            }
            case Where::Root: {
                if (pending_ == Pending::Type) {
                    type_was_nonstring_ = true;
                    issue("type-not-string", std::string("`type` must be a string, found ") + desc,
                          "$.type");
                } else if (pending_ == Pending::Shape) {
                    issue("shape-not-array",
                          std::string("`shape` must be an array, found ") + desc, "$.shape");
                    seen_shape_ = true;
                    shape_is_array_ = false;
                } else if (pending_ == Pending::Data) {
                    issue("data-not-array", std::string("`data` must be an array, found ") + desc,
                          "$.data");
                    seen_data_ = true;
                    data_is_array_ = false;
                }
                pending_ = Pending::None;
                return true;
            }
            case Where::Done:
                return true;
        }
        return true;
    }

    bool boolean_;
    Where where_ = Where::Start;
    Pending pending_ = Pending::None;
    int skip_depth_ = 0;
    std::string current_key_;
};

struct Analysis {
    std::vector<ValidationIssue> issues;
    std::optional<DataTensor> tensor;
};

Analysis analyze(std::string_view lexical, TensorDatatypeIri datatype) {
    Analysis result;
    TensorSaxHandler handler(datatype.is_boolean());
    bool ok = nlohmann::json::sax_parse(lexical, &handler);

    if (handler.syntax_error_) {
        // A malformed document gets exactly one issue; partial findings from
        // the prefix are unreliable.
        result.issues.push_back({"json-syntax", *handler.syntax_error_,
                                 "$[byte " + std::to_string(handler.syntax_position_) + "]"});
        return result;
    }
    if (!ok || !handler.root_is_object_) {
        if (handler.issues_.empty()) {
            result.issues.push_back({"root-not-object", "root must be a JSON object", "$"});
        } else {
            result.issues = std::move(handler.issues_);
        }
        return result;
    }

    result.issues = std::move(handler.issues_);
    auto issue = [&](std::string code, std::string message, std::string path) {
        result.issues.push_back({std::move(code), std::move(message), std::move(path)});
    };

    // Required keys.
    std::optional<Dtype> dtype;
    if (datatype.is_boolean()) {
        dtype = Dtype::Bool;
    } else if (!handler.seen_type_) {
        issue("missing-key", "numeric data tensors require the `type` key", "$");
    } else if (handler.type_value_) {
        Dtype parsed;
        if (dtype_from_tag(*handler.type_value_, parsed)) {
            dtype = parsed;
        } else {
            issue("unknown-type-tag",
                  "`" + *handler.type_value_ + "` is not one of the six numeric type tags",
                  "$.type");
        }
    }
    if (!handler.seen_shape_) issue("missing-key", "missing required key `shape`", "$");
    if (!handler.seen_data_) issue("missing-key", "missing required key `data`", "$");

    // Shape entries.
    bool shape_ok = handler.seen_shape_ && handler.shape_is_array_;
    std::vector<std::int64_t> dims;
    for (std::size_t i = 0; i < handler.shape_.size(); ++i) {
        const auto& e = handler.shape_[i];
        std::string path = "$.shape[" + std::to_string(i) + "]";
        if (!e.is_int) {
            issue("shape-entry-not-integer",
                  std::string("shape entries must be integers, found ") + e.desc, path);
            shape_ok = false;
        } else if (e.negative) {
            issue("shape-entry-negative", "shape entries must be non-negative", path);
            shape_ok = false;
        } else {
            dims.push_back(e.value);
        }
    }

    // Length vs product.
    if (shape_ok && handler.data_is_array_) {
        unsigned __int128 product = 1;
        bool overflow = false;
        for (std::int64_t d : dims) {
            product *= static_cast<unsigned __int128>(d);
            if (product > static_cast<unsigned __int128>(DataTensor::kMaxElements)) {
                overflow = true;
                break;
            }
        }
        if (overflow) {
            issue("shape-too-large", "shape element count exceeds the 2^31-1 limit", "$.shape");
        } else if (static_cast<std::uint64_t>(product) != handler.data_.size()) {
            issue("length-mismatch",
                  "`data` length " + std::to_string(handler.data_.size()) +
                      " does not equal shape element count " +
                      std::to_string(static_cast<std::uint64_t>(product)),
                  "$.data");
        }
    }

    // Element checks.
    if (handler.data_is_array_) {
        for (std::size_t i = 0; i < handler.data_.size(); ++i) {
            const auto& t = handler.data_[i];
            std::string path = "$.data[" + std::to_string(i) + "]";
            if (datatype.is_boolean()) {
                if (t.kind != DataToken::Kind::Bool) {
                    issue("element-not-boolean",
                          "boolean tensor elements must be JSON booleans", path);
                }
                continue;
            }
            if (t.kind == DataToken::Kind::Other || t.kind == DataToken::Kind::Bool) {
                issue("element-not-number", "numeric tensor elements must be JSON numbers", path);
                continue;
            }
            if (!dtype) continue;  // no tag to check against
            if (is_int(*dtype)) {
                if (t.kind == DataToken::Kind::Float) {
                    if (t.integral_repr) {
                        issue("element-out-of-range", "integer value out of range for " +
                                                          std::string(dtype_tag(*dtype)),
                              path);
                    } else {
                        issue("element-not-integer",
                              "elements of an int-typed tensor must be written without "
                              "fraction or exponent",
                              path);
                    }
                    continue;
                }
                if (t.kind == DataToken::Kind::BigUint) {
                    issue("element-out-of-range",
                          "integer value out of range for " + std::string(dtype_tag(*dtype)),
                          path);
                    continue;
                }
                std::int64_t lo = 0, hi = 0;
                switch (*dtype) {
                    case Dtype::Int16: lo = -32768; hi = 32767; break;
                    case Dtype::Int32: lo = -2147483648LL; hi = 2147483647LL; break;
                    default:
                        lo = std::numeric_limits<std::int64_t>::min();
                        hi = std::numeric_limits<std::int64_t>::max();
                        break;
                }
                if (t.i < lo || t.i > hi) {
                    issue("element-out-of-range",
                          std::to_string(t.i) + " out of range for " +
                              std::string(dtype_tag(*dtype)),
                          path);
                }
            } else {
                double v = t.kind == DataToken::Kind::Int ? static_cast<double>(t.i)
                           : t.kind == DataToken::Kind::BigUint ? static_cast<double>(t.u)
                                                                : t.f;
                if (!std::isfinite(v)) {
                    issue("element-not-finite", "float tensor elements must be finite", path);
                    continue;
                }
                if (*dtype == Dtype::Float16 && std::fabs(v) > kHalfMax) {
                    issue("element-overflows-float16",
                          "magnitude exceeds the largest finite float16 (65504)", path);
                } else if (*dtype == Dtype::Float32 && std::fabs(v) > kFloat32Max) {
                    issue("element-overflows-float32",
                          "magnitude exceeds the largest finite float32", path);
                }
            }
        }
    }

    if (!result.issues.empty()) return result;

    // Construction. All rules hold, so these cannot throw.
    Shape shape{std::move(dims)};
    if (*dtype == Dtype::Bool) {
        DataTensor::BoolVec out(handler.data_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = handler.data_[i].b ? 1 : 0;
        result.tensor = DataTensor::booleans(std::move(shape), std::move(out));
    } else if (is_int(*dtype)) {
        DataTensor::IntVec out(handler.data_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = handler.data_[i].i;
        result.tensor = DataTensor::ints(*dtype, std::move(shape), std::move(out));
    } else {
        DataTensor::FloatVec out(handler.data_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const auto& t = handler.data_[i];
            double v = t.kind == DataToken::Kind::Int ? static_cast<double>(t.i)
                       : t.kind == DataToken::Kind::BigUint ? static_cast<double>(t.u)
                                                            : t.f;
            out[i] = narrow_float(*dtype, v);
        }
        result.tensor = DataTensor::floats(*dtype, std::move(shape), std::move(out));
    }
    return result;
}

void append_int(std::string& out, std::int64_t v) {
    char buf[24];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, r.ptr);
}

void append_shortest(std::string& out, double v, bool as_binary32) {
    char buf[40];
    std::to_chars_result r;
    if (as_binary32) {
        r = std::to_chars(buf, buf + sizeof buf, static_cast<float>(v));
    } else {
        r = std::to_chars(buf, buf + sizeof buf, v);
    }
    out.append(buf, r.ptr);
}

}  // namespace

bool TensorDatatypeIri::from_iri(std::string_view iri, TensorDatatypeIri& out) {
    if (iri == kNumericTensorIri) {
        out = numeric();
        return true;
    }
    if (iri == kBooleanTensorIri) {
        out = boolean();
        return true;
    }
    return false;
}

DataTensor parse_tensor_literal(std::string_view lexical, TensorDatatypeIri datatype) {
    Analysis a = analyze(lexical, datatype);
    if (!a.issues.empty()) {
        const auto& first = a.issues.front();
        throw IllTypedLiteralError(first.message + " (at " + first.path + ")");
    }
    return std::move(*a.tensor);
}

ValidationReport validate(std::string_view lexical, TensorDatatypeIri datatype) {
    Analysis a = analyze(lexical, datatype);
    return ValidationReport{std::move(a.issues)};
}

std::string serialize_tensor(const DataTensor& t, TensorDatatypeIri target) {
    if (target.is_boolean() != t.is_bool_class()) {
        throw DtypeMismatchError("tensor dtype class does not match the target datatype");
    }
    if (t.is_float_class()) {
        for (double v : t.float_data()) {
            if (!std::isfinite(v)) {
                throw NonFiniteValueError("NaN or infinity has no lexical form");
            }
        }
    }

    std::string out;
    out.reserve(32 + static_cast<std::size_t>(t.size()) * 8);
    out += '{';
    if (!t.is_bool_class()) {
        out += "\"type\":\"";
        out += dtype_tag(t.dtype());
        out += "\",";
    }
    out += "\"shape\":[";
    for (std::size_t i = 0; i < t.rank(); ++i) {
        if (i) out += ',';
        append_int(out, t.shape().dim(i));
    }
    out += "],\"data\":[";
    std::size_t n = static_cast<std::size_t>(t.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ',';
        if (t.is_bool_class()) {
            out += t.bool_data()[i] ? "true" : "false";
        } else if (t.is_int_class()) {
            append_int(out, t.int_data()[i]);
        } else {
            append_shortest(out, t.float_data()[i], t.dtype() != Dtype::Float64);
        }
    }
    out += "]}";
    return out;
}

std::string serialize_tensor(const DataTensor& t) {
    return serialize_tensor(t, t.is_bool_class() ? TensorDatatypeIri::boolean()
                                                 : TensorDatatypeIri::numeric());
}

}  // namespace rdft
