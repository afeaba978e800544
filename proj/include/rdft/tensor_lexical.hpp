// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdft/tensor.hpp"

namespace rdft {

/// The two recognized tensor datatype IRIs.
inline constexpr std::string_view kNumericTensorIri =
    "https://w3id.org/rdf-tensor/datatypes#NumericDataTensor";
inline constexpr std::string_view kBooleanTensorIri =
    "https://w3id.org/rdf-tensor/datatypes#BooleanDataTensor";

/// Strong wrapper for a tensor datatype IRI; only the two datatype IRIs
/// above construct successfully.
class TensorDatatypeIri {
public:
    static TensorDatatypeIri numeric() { return TensorDatatypeIri(false); }
    static TensorDatatypeIri boolean() { return TensorDatatypeIri(true); }

    /// Recognizes exactly the two tensor datatype IRIs; false otherwise.
    static bool from_iri(std::string_view iri, TensorDatatypeIri& out);

    static bool is_tensor_datatype(std::string_view iri) {
        TensorDatatypeIri tmp = numeric();
        return from_iri(iri, tmp);
    }

    bool is_boolean() const { return boolean_; }
    std::string_view iri() const {
        return boolean_ ? kBooleanTensorIri : kNumericTensorIri;
    }

    bool operator==(const TensorDatatypeIri&) const = default;

private:
    explicit TensorDatatypeIri(bool boolean) : boolean_(boolean) {}
    bool boolean_;
};

/// One rule violation found while checking a lexical form.
struct ValidationIssue {
    std::string code;     // stable machine-readable identifier
    std::string message;  // human-readable description
    std::string path;     // JSON path, e.g. "$.data[3]"
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
};

/// Maps a lexical form to its tensor value. Throws IllTypedLiteralError
/// carrying the first violated rule.
DataTensor parse_tensor_literal(std::string_view lexical, TensorDatatypeIri datatype);

/// Canonical lexical form: single-line JSON, key order `type` (numeric only),
/// `shape`, `data`, no whitespace, ints without fraction or exponent, floats
/// in shortest round-trip decimal form. Throws NonFiniteValueError when an
/// element is NaN or infinite, DtypeMismatchError when the target datatype
/// does not match the tensor's dtype class.
std::string serialize_tensor(const DataTensor& t, TensorDatatypeIri target);

/// Convenience overload choosing the datatype matching the tensor.
std::string serialize_tensor(const DataTensor& t);

/// Collects every detectable rule violation (a JSON syntax error yields a
/// single issue). The report is valid iff parse_tensor_literal would succeed.
ValidationReport validate(std::string_view lexical, TensorDatatypeIri datatype);

}  // namespace rdft
