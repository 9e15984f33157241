#pragma once

#include "adr/contracts.hpp"
#include "adr/recovery.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adr::dsl {

struct AssertedDecl {
    std::string production;  // name of the production declaration
    AssertedProduction value;

    friend bool operator==(const AssertedDecl &a, const AssertedDecl &b)
    {
        return a.production == b.production && a.value.pre == b.value.pre &&
               a.value.production == b.value.production && a.value.post == b.value.post &&
               a.value.h == b.value.h && a.value.zs.vars == b.value.zs.vars;
    }
};

struct StyleDecl {
    Formula invariant = Formula::top();
    std::vector<std::string> rules;  // asserted production names

    friend bool operator==(const StyleDecl &, const StyleDecl &) = default;
};

/// A parsed `.adr` file. Every section is keyed by declaration name.
struct Document {
    Alphabet types;
    std::map<std::string, Graph> graphs;
    std::map<std::string, Production> productions;
    std::map<std::string, Formula> formulas;
    std::map<std::string, AssertedDecl> asserted;
    std::map<std::string, StyleDecl> styles;

    /// Lookups throw InputError naming the missing declaration.
    const Graph &graph(const std::string &name) const;
    const Production &production(const std::string &name) const;
    const Formula &formula(const std::string &name) const;
    const AssertedDecl &asserted_production(const std::string &name) const;
    Style style(const std::string &name) const;

    friend bool operator==(const Document &, const Document &) = default;
};

struct Diagnostic {
    int line = 0;
    int column = 0;
    std::string message;
};

std::string to_string(const Diagnostic &d);

struct ParseResult {
    std::optional<Document> document;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

/// Parses a document. Never throws on malformed text; problems are
/// returned as diagnostics and `document` is empty.
ParseResult parse(std::string_view text);

/// Parses a single formula against an alphabet. Throws InputError with the
/// first diagnostic on failure.
Formula parse_formula(std::string_view text, const Alphabet &alphabet);

std::string serialize(const Document &doc);
std::string serialize(const Graph &g, const std::string &name);
std::string serialize(const Formula &f);

} // namespace adr::dsl
