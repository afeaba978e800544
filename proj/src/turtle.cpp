// SPDX-License-Identifier: Apache-2.0
#include "rdft/turtle.hpp"

#include <cctype>
#include <cstdint>

#include "rdft/errors.hpp"

namespace rdft {

namespace {

bool is_pn_local_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':' || c == '%' ||
           c >= 0x80;
}

bool is_pn_prefix_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80;
}

bool has_scheme(std::string_view iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
    for (std::size_t i = 1; i < iri.size(); ++i) {
        char c = iri[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
            return false;
        }
    }
    return false;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class Parser {
public:
    Parser(std::string_view text, std::string_view base) : text_(text), base_(base) {}

    TurtleDocument run() {
        skip_trivia();
        while (!eof()) {
            statement();
            skip_trivia();
        }
        TurtleDocument doc;
        doc.triples = std::move(triples_);
        doc.lines = std::move(lines_);
        doc.prefixes = std::move(prefixes_);
        return doc;
    }

private:
    // --- character level ---

    bool eof() const { return pos_ >= text_.size(); }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw TurtleParseError(message, line_, col_);
    }

    [[noreturn]] void fail_unknown_prefix(const std::string& prefix) const {
        throw UnknownPrefixError("unknown prefix `" + prefix + ":`", line_, col_);
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') take();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else {
                break;
            }
        }
    }

    void expect(char c, const char* what) {
        if (eof() || peek() != c) {
            fail(std::string("expected ") + what +
                 (eof() ? " but reached end of input"
                        : std::string(" before `") + peek() + "`"));
        }
        take();
    }

    bool try_keyword(std::string_view kw, bool case_insensitive) {
        if (pos_ + kw.size() > text_.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            char a = text_[pos_ + i];
            char b = kw[i];
            if (case_insensitive) {
                a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
                b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
            }
            if (a != b) return false;
        }
        // must not run into a longer name
        char next = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : '\0';
        if (is_pn_local_char(static_cast<unsigned char>(next))) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) take();
        return true;
    }

    // --- grammar ---

    void statement() {
        if (peek() == '@') {
            directive();
            return;
        }
        if ((peek() == 'P' || peek() == 'p') && try_keyword("PREFIX", true)) {
            sparql_prefix();
            return;
        }
        if ((peek() == 'B' || peek() == 'b') && try_keyword("BASE", true)) {
            fail("BASE directive is not supported");
        }
        triples();
        skip_trivia();
        expect('.', "`.` terminating the triple");
    }

    void directive() {
        take();  // '@'
        if (try_keyword("prefix", false)) {
            sparql_prefix();
            skip_trivia();
            expect('.', "`.` terminating @prefix");
            return;
        }
        fail("unsupported directive (only @prefix is recognized)");
    }

    void sparql_prefix() {
        skip_trivia();
        std::string name = pname_prefix();
        expect(':', "`:` after prefix name");
        skip_trivia();
        std::string iri = iriref();
        prefixes_[name] = iri;
    }

    std::string pname_prefix() {
        std::string name;
        while (!eof() && is_pn_prefix_char(static_cast<unsigned char>(peek()))) {
            if (peek() == '.' &&
                !is_pn_prefix_char(static_cast<unsigned char>(peek(1)))) {
                break;
            }
            name += take();
        }
        return name;
    }

    void triples() {
        Term subject = subject_term();
        predicate_object_list(subject);
    }

    Term subject_term() {
        skip_trivia();
        if (eof()) fail("expected a subject");
        char c = peek();
        if (c == '<') return Term::iri(iriref());
        if (c == '_') return blank_node();
        if (c == '[') fail("anonymous blank nodes `[ ]` are not supported");
        if (c == '(') fail("collections `( )` are not supported");
        return prefixed_name();
    }

    void predicate_object_list(const Term& subject) {
        while (true) {
            skip_trivia();
            Term predicate = verb();
            object_list(subject, predicate);
            skip_trivia();
            if (peek() == ';') {
                take();
                skip_trivia();
                // trailing `;` before `.` is legal
                if (peek() == '.' || peek() == ';') continue;
                if (eof()) fail("expected a predicate after `;`");
                continue;
            }
            break;
        }
    }

    Term verb() {
        if (peek() == 'a') {
            char next = peek(1);
            if (!is_pn_local_char(static_cast<unsigned char>(next))) {
                take();
                return Term::iri(std::string(kRdfType));
            }
        }
        if (peek() == '<') return Term::iri(iriref());
        Term t = prefixed_name();
        return t;
    }

    void object_list(const Term& subject, const Term& predicate) {
        while (true) {
            skip_trivia();
            std::size_t object_line = line_;
            Term object = object_term();
            triples_.emplace_back(subject, predicate, object);
            lines_.push_back(object_line);
            skip_trivia();
            if (peek() == ',') {
                take();
                continue;
            }
            break;
        }
    }

    Term object_term() {
        if (eof()) fail("expected an object");
        char c = peek();
        if (c == '<') return Term::iri(iriref());
        if (c == '_') return blank_node();
        if (c == '"') return rdf_literal();
        if (c == '\'') fail("single-quoted strings are not supported");
        if (c == '[') fail("anonymous blank nodes `[ ]` are not supported");
        if (c == '(') fail("collections `( )` are not supported");
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            return numeric_literal();
        }
        if (try_keyword("true", false)) return Term::literal("true", std::string(xsd::kBoolean));
        if (try_keyword("false", false)) {
            return Term::literal("false", std::string(xsd::kBoolean));
        }
        return prefixed_name();
    }

    std::string iriref() {
        expect('<', "`<` opening an IRI");
        std::string iri;
        while (!eof() && peek() != '>') {
            char c = take();
            if (c == '\n') fail("newline inside IRI");
            iri += c;
        }
        expect('>', "`>` closing the IRI");
        if (!has_scheme(iri)) {
            iri = base_ + iri;
        }
        return iri;
    }

    Term blank_node() {
        take();  // '_'
        expect(':', "`:` after `_` in a blank node label");
        std::string label;
        while (!eof() && is_pn_local_char(static_cast<unsigned char>(peek()))) {
            if (peek() == '.' && !is_pn_local_char(static_cast<unsigned char>(peek(1)))) break;
            label += take();
        }
        if (label.empty()) fail("empty blank node label");
        return Term::blank(label);
    }

    Term prefixed_name() {
        std::string prefix;
        while (!eof() && peek() != ':' &&
               is_pn_prefix_char(static_cast<unsigned char>(peek()))) {
            if (peek() == '.' && peek(1) != ':' &&
                !is_pn_prefix_char(static_cast<unsigned char>(peek(1)))) {
                break;
            }
            prefix += take();
        }
        if (eof() || peek() != ':') {
            fail(prefix.empty() ? "expected a term" : "expected `:` in prefixed name `" + prefix + "...`");
        }
        take();  // ':'
        std::string local;
        while (!eof() && is_pn_local_char(static_cast<unsigned char>(peek()))) {
            if (peek() == '.' && !is_pn_local_char(static_cast<unsigned char>(peek(1)))) break;
            local += take();
        }
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail_unknown_prefix(prefix);
        return Term::iri(it->second + local);
    }

    Term rdf_literal() {
        if (peek(1) == '"' && peek(2) == '"') {
            fail("triple-quoted strings are not supported");
        }
        std::string value = quoted_string();
        if (peek() == '@') {
            take();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
                lang += take();
            }
            if (lang.empty()) fail("empty language tag");
            return Term::lang_literal(std::move(value), std::move(lang));
        }
        if (peek() == '^') {
            take();
            expect('^', "`^^` before datatype IRI");
            skip_trivia();
            Term dt = peek() == '<' ? Term::iri(iriref()) : prefixed_name();
            return Term::literal(std::move(value), dt.as_iri().value);
        }
        return Term::plain(std::move(value));
    }

    std::string quoted_string() {
        expect('"', "`\"` opening a string");
        std::string out;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = take();
            if (c == '"') break;
            if (c == '\n') fail("newline inside string literal (use \\n)");
            if (c != '\\') {
                out += c;
                continue;
            }
            if (eof()) fail("dangling escape at end of input");
            char e = take();
            switch (e) {
                case 't': out += '\t'; break;
                case 'b': out += '\b'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 'f': out += '\f'; break;
                case '"': out += '"'; break;
                case '\'': out += '\''; break;
                case '\\': out += '\\'; break;
                case 'u': append_utf8(out, hex_codepoint(4)); break;
                case 'U': append_utf8(out, hex_codepoint(8)); break;
                default: fail(std::string("unknown escape `\\") + e + "`");
            }
        }
        return out;
    }

    std::uint32_t hex_codepoint(int digits) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof()) fail("truncated \\u escape");
            char c = take();
            cp <<= 4;
            if (c >= '0' && c <= '9') {
                cp |= static_cast<std::uint32_t>(c - '0');
            } else if (c >= 'a' && c <= 'f') {
                cp |= static_cast<std::uint32_t>(c - 'a' + 10);
            } else if (c >= 'A' && c <= 'F') {
                cp |= static_cast<std::uint32_t>(c - 'A' + 10);
            } else {
                fail("invalid hex digit in \\u escape");
            }
        }
        return cp;
    }

    Term numeric_literal() {
        std::string lex;
        bool has_dot = false, has_exp = false;
        if (peek() == '+' || peek() == '-') lex += take();
        auto digits = [&] {
            std::size_t before = lex.size();
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) lex += take();
            return lex.size() > before;
        };
        bool int_part = digits();
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            has_dot = true;
            lex += take();
            digits();
        }
        if (!int_part && !has_dot) fail("malformed numeric literal");
        if (peek() == 'e' || peek() == 'E') {
            has_exp = true;
            lex += take();
            if (peek() == '+' || peek() == '-') lex += take();
            if (!digits()) fail("malformed exponent in numeric literal");
        }
        std::string_view datatype =
            has_exp ? xsd::kDouble : has_dot ? xsd::kDecimal : xsd::kInteger;
        return Term::literal(std::move(lex), std::string(datatype));
    }

    std::string_view text_;
    std::string base_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::map<std::string, std::string> prefixes_;
    std::vector<Triple> triples_;
    std::vector<std::size_t> lines_;
};

}  // namespace

TurtleDocument parse_turtle(std::string_view text, std::string_view base) {
    return Parser(text, base).run();
}

}  // namespace rdft
