// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

namespace rdft {

namespace xsd {
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kFloat = "http://www.w3.org/2001/XMLSchema#float";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kInt = "http://www.w3.org/2001/XMLSchema#int";
inline constexpr std::string_view kLong = "http://www.w3.org/2001/XMLSchema#long";
inline constexpr std::string_view kShort = "http://www.w3.org/2001/XMLSchema#short";
}  // namespace xsd

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

/// RDF term. Literals always carry a datatype IRI; plain strings carry
/// xsd:string, language-tagged strings carry rdf:langString plus the tag.
/// Equality is term equality: same variant, all fields byte-identical.
class Term {
public:
    struct Iri {
        std::string value;
        bool operator==(const Iri&) const = default;
    };
    struct BlankNode {
        std::string label;
        bool operator==(const BlankNode&) const = default;
    };
    struct Literal {
        std::string lexical;
        std::string datatype;
        std::string language;  // empty unless datatype is rdf:langString
        bool operator==(const Literal&) const = default;
    };

    static Term iri(std::string value) { return Term(Iri{std::move(value)}); }
    static Term blank(std::string label) { return Term(BlankNode{std::move(label)}); }
    static Term literal(std::string lexical, std::string datatype) {
        return Term(Literal{std::move(lexical), std::move(datatype), ""});
    }
    static Term plain(std::string lexical) {
        return literal(std::move(lexical), std::string(xsd::kString));
    }
    static Term lang_literal(std::string lexical, std::string language) {
        return Term(Literal{std::move(lexical), std::string(kRdfLangString),
                            std::move(language)});
    }

    bool is_iri() const { return std::holds_alternative<Iri>(node_); }
    bool is_blank() const { return std::holds_alternative<BlankNode>(node_); }
    bool is_literal() const { return std::holds_alternative<Literal>(node_); }

    const Iri& as_iri() const { return std::get<Iri>(node_); }
    const BlankNode& as_blank() const { return std::get<BlankNode>(node_); }
    const Literal& as_literal() const { return std::get<Literal>(node_); }

    bool operator==(const Term&) const = default;

    /// N-Triples style rendering: <iri>, _:label, "escaped"^^<dt>. Plain
    /// xsd:string literals render without the datatype suffix.
    std::string to_ntriples() const;

    std::size_t hash() const;

private:
    explicit Term(std::variant<Iri, BlankNode, Literal> node) : node_(std::move(node)) {}
    std::variant<Iri, BlankNode, Literal> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Ground statement. Subject must be an IRI or blank node, predicate an IRI.
struct Triple {
    Term subject;
    Term predicate;
    Term object;

    Triple(Term s, Term p, Term o);

    bool operator==(const Triple&) const = default;
};

/// One position of a triple pattern: a concrete term or a named variable.
class PatternNode {
public:
    PatternNode(Term term) : node_(std::move(term)) {}  // NOLINT: implicit by design
    static PatternNode variable(std::string name) { return PatternNode(Var{std::move(name)}); }

    bool is_variable() const { return std::holds_alternative<Var>(node_); }
    const std::string& variable_name() const { return std::get<Var>(node_).name; }
    const Term& term() const { return std::get<Term>(node_); }

    bool matches(const Term& t) const { return is_variable() || term() == t; }

private:
    struct Var {
        std::string name;
    };
    explicit PatternNode(Var v) : node_(std::move(v)) {}
    std::variant<Term, Var> node_;
};

struct TriplePattern {
    PatternNode subject;
    PatternNode predicate;
    PatternNode object;
};

/// Escapes a string for N-Triples / Turtle double-quoted form.
std::string escape_string_literal(std::string_view s);

}  // namespace rdft
