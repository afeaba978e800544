// SPDX-License-Identifier: Apache-2.0
#include "rdft/term.hpp"

#include <stdexcept>

namespace rdft {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string escape_string_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string Term::to_ntriples() const {
    if (is_iri()) return "<" + as_iri().value + ">";
    if (is_blank()) return "_:" + as_blank().label;
    const Literal& lit = as_literal();
    std::string out = "\"" + escape_string_literal(lit.lexical) + "\"";
    if (!lit.language.empty()) {
        out += "@" + lit.language;
    } else if (lit.datatype != xsd::kString) {
        out += "^^<" + lit.datatype + ">";
    }
    return out;
}

std::size_t Term::hash() const {
    std::hash<std::string> h;
    if (is_iri()) return combine(1, h(as_iri().value));
    if (is_blank()) return combine(2, h(as_blank().label));
    const Literal& lit = as_literal();
    return combine(combine(combine(3, h(lit.lexical)), h(lit.datatype)), h(lit.language));
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.is_literal()) {
        throw std::invalid_argument("triple subject must be an IRI or blank node");
    }
    if (!predicate.is_iri()) {
        throw std::invalid_argument("triple predicate must be an IRI");
    }
}

}  // namespace rdft
