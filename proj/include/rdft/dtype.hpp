// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

#include "rdft/errors.hpp"

namespace rdft {

/// Element type of a data tensor. The six numeric tags correspond exactly
/// to the lexical `type` strings of numeric tensor literals; Bool never
/// appears as a `type` string.
enum class Dtype : std::uint8_t {
    Int16,
    Int32,
    Int64,
    Float16,
    Float32,
    Float64,
    Bool,
};

constexpr bool is_int(Dtype t) {
    return t == Dtype::Int16 || t == Dtype::Int32 || t == Dtype::Int64;
}

constexpr bool is_float(Dtype t) {
    return t == Dtype::Float16 || t == Dtype::Float32 || t == Dtype::Float64;
}

constexpr bool is_numeric(Dtype t) { return is_int(t) || is_float(t); }

/// Lexical `type` tag for numeric dtypes ("int16" ... "float64").
constexpr std::string_view dtype_tag(Dtype t) {
    switch (t) {
        case Dtype::Int16: return "int16";
        case Dtype::Int32: return "int32";
        case Dtype::Int64: return "int64";
        case Dtype::Float16: return "float16";
        case Dtype::Float32: return "float32";
        case Dtype::Float64: return "float64";
        case Dtype::Bool: return "boolean";
    }
    return "";
}

/// Maps a lexical `type` tag to its dtype. Returns false for anything that
/// is not one of the six numeric tags (boolean included: it is never a tag).
constexpr bool dtype_from_tag(std::string_view tag, Dtype& out) {
    if (tag == "int16") { out = Dtype::Int16; return true; }
    if (tag == "int32") { out = Dtype::Int32; return true; }
    if (tag == "int64") { out = Dtype::Int64; return true; }
    if (tag == "float16") { out = Dtype::Float16; return true; }
    if (tag == "float32") { out = Dtype::Float32; return true; }
    if (tag == "float64") { out = Dtype::Float64; return true; }
    return false;
}

/// Width rank within the int family (Int16=0 .. Int64=2) or the float
/// family (Float16=0 .. Float64=2).
constexpr int dtype_width_rank(Dtype t) {
    switch (t) {
        case Dtype::Int16:
        case Dtype::Float16: return 0;
        case Dtype::Int32:
        case Dtype::Float32: return 1;
        case Dtype::Int64:
        case Dtype::Float64: return 2;
        case Dtype::Bool: return -1;
    }
    return -1;
}

/// Result dtype of mixed-dtype numeric operations: any float input makes the
/// result the widest float present (so Int64 + Float16 -> Float16), otherwise
/// the widest int present. Booleans are not promotable.
inline Dtype promote(Dtype a, Dtype b) {
    if (!is_numeric(a) || !is_numeric(b)) {
        throw DtypeMismatchError("promote: boolean dtype is not numeric");
    }
    if (is_float(a) || is_float(b)) {
        if (!is_float(a)) return b;
        if (!is_float(b)) return a;
        return dtype_width_rank(a) >= dtype_width_rank(b) ? a : b;
    }
    return dtype_width_rank(a) >= dtype_width_rank(b) ? a : b;
}

}  // namespace rdft
