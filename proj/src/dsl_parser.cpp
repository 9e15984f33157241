#include "adr/dsl.hpp"

#include "adr/error.hpp"

#include <charconv>
#include <set>

namespace adr::dsl {

std::string to_string(const Diagnostic &d)
{
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

namespace {

constexpr int kMaxNesting = 200;

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

struct Abort {};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    // Returns false and fills `diag` on an unexpected character.
    bool run(std::vector<Token> &out, Diagnostic &diag)
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            if (c == '#' || (c == '/' && peek(1) == '/')) {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
                continue;
            }
            const int line = line_, col = col_;
            if (is_ident_start(c)) {
                std::size_t start = pos_;
                while (pos_ < src_.size() && is_ident_char(src_[pos_]))
                    advance();
                out.push_back({Token::Kind::ident, std::string(src_.substr(start, pos_ - start)), line, col});
                continue;
            }
            if (c >= '0' && c <= '9') {
                std::size_t start = pos_;
                while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
                    advance();
                out.push_back({Token::Kind::number, std::string(src_.substr(start, pos_ - start)), line, col});
                continue;
            }
            if ((c == '-' && peek(1) == '>') || (c == '!' && peek(1) == '=')) {
                out.push_back({Token::Kind::punct, std::string(src_.substr(pos_, 2)), line, col});
                advance();
                advance();
                continue;
            }
            if (std::string_view("(){},.;=&|!:/").find(c) != std::string_view::npos) {
                out.push_back({Token::Kind::punct, std::string(1, c), line, col});
                advance();
                continue;
            }
            diag = {line, col, "unexpected character (byte " +
                                   std::to_string(static_cast<unsigned char>(c)) + ")"};
            return false;
        }
        out.push_back({Token::Kind::end, "", line_, col_});
        return true;
    }

private:
    static bool is_ident_start(char c)
    {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

    char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::set<std::string> kFormulaKeywords = {"forall", "exists", "true", "false", "no"};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic> &diags)
        : toks_(std::move(tokens)), diags_(diags)
    {
    }

    Document document()
    {
        Document doc;
        while (!at_end()) {
            const Token &t = cur();
            if (is_word("type"))
                type_decl(doc);
            else if (is_word("graph"))
                graph_decl(doc);
            else if (is_word("production"))
                production_decl(doc);
            else if (is_word("formula"))
                formula_decl(doc);
            else if (is_word("asserted"))
                asserted_decl(doc);
            else if (is_word("style"))
                style_decl(doc);
            else
                fail(t, "expected a declaration (type, graph, production, formula, asserted, style), found " +
                            describe(t));
        }
        return doc;
    }

    Formula standalone_formula(const Alphabet &alphabet)
    {
        alphabet_ = &alphabet;
        Formula f = formula_checked();
        if (!at_end())
            fail(cur(), "unexpected " + describe(cur()) + " after formula");
        return f;
    }

private:
    // -- token helpers ------------------------------------------------------

    const Token &cur() const { return toks_[pos_]; }
    const Token &lookahead(std::size_t k) const
    {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    bool at_end() const { return cur().kind == Token::Kind::end; }
    bool is_word(const char *w) const { return cur().kind == Token::Kind::ident && cur().text == w; }
    bool is_punct(const char *p) const { return cur().kind == Token::Kind::punct && cur().text == p; }

    static std::string describe(const Token &t)
    {
        switch (t.kind) {
        case Token::Kind::end:
            return "end of input";
        case Token::Kind::number:
            return "number '" + t.text + "'";
        default:
            return "'" + t.text + "'";
        }
    }

    [[noreturn]] void fail(const Token &t, std::string msg)
    {
        diags_.push_back({t.line, t.column, std::move(msg)});
        throw Abort{};
    }

    void error(const Token &t, std::string msg) { diags_.push_back({t.line, t.column, std::move(msg)}); }

    void expect_punct(const char *p)
    {
        if (!is_punct(p)) {
            if (at_end() && (std::string_view(p) == "}" || std::string_view(p) == ")"))
                fail(cur(), std::string("unclosed block: expected '") + p + "' before end of input");
            fail(cur(), std::string("expected '") + p + "', found " + describe(cur()));
        }
        ++pos_;
    }

    void expect_word(const char *w)
    {
        if (!is_word(w))
            fail(cur(), std::string("expected '") + w + "', found " + describe(cur()));
        ++pos_;
    }

    const Token &ident(const char *what)
    {
        if (cur().kind != Token::Kind::ident)
            fail(cur(), std::string("expected ") + what + ", found " + describe(cur()));
        return toks_[pos_++];
    }

    std::vector<const Token *> ident_list(const char *what, const char *terminator)
    {
        std::vector<const Token *> out;
        if (is_punct(terminator))
            return out;
        out.push_back(&ident(what));
        while (is_punct(",")) {
            ++pos_;
            out.push_back(&ident(what));
        }
        return out;
    }

    template <class Map>
    void check_unique(const Map &m, const Token &name, const char *kind)
    {
        if (m.count(name.text))
            error(name, std::string("duplicate ") + kind + " '" + name.text + "'");
    }

    const EdgeType *lookup_type(const Token &t)
    {
        const EdgeType *d = alphabet_ ? alphabet_->find(t.text) : nullptr;
        if (!d)
            error(t, "unknown edge type '" + t.text + "'");
        return d;
    }

    // -- declarations -------------------------------------------------------

    void type_decl(Document &doc)
    {
        ++pos_;
        const Token &name = ident("type name");
        expect_punct("/");
        if (cur().kind != Token::Kind::number)
            fail(cur(), "expected arity after '/', found " + describe(cur()));
        int arity = 0;
        const auto &txt = cur().text;
        auto [ptr, ec] = std::from_chars(txt.data(), txt.data() + txt.size(), arity);
        if (ec != std::errc{} || ptr != txt.data() + txt.size() || arity > 64)
            fail(cur(), "arity '" + txt + "' out of range");
        ++pos_;
        EdgeKind kind = EdgeKind::concrete;
        if (is_word("abstract")) {
            kind = EdgeKind::abstract;
            ++pos_;
        } else if (is_word("concrete")) {
            ++pos_;
        }
        expect_punct(";");
        if (doc.types.contains(name.text))
            error(name, "duplicate type '" + name.text + "'");
        else
            doc.types.add({name.text, arity, kind});
        alphabet_ = &doc.types;
    }

    Graph graph_body()
    {
        expect_punct("{");
        Graph g;
        std::vector<std::pair<const Token *, const Token *>> attachments;
        while (!is_punct("}")) {
            if (at_end())
                fail(cur(), "unclosed block: expected '}' before end of input");
            if (is_word("node")) {
                ++pos_;
                const Token &n = ident("node name");
                expect_punct(";");
                if (g.has_node(NodeId(n.text)))
                    error(n, "duplicate node '" + n.text + "'");
                g.add_node(NodeId(n.text));
            } else if (is_word("edge")) {
                ++pos_;
                const Token &id = ident("edge name");
                expect_punct(":");
                const Token &type = ident("edge type");
                expect_punct("(");
                auto nodes = ident_list("node name", ")");
                expect_punct(")");
                expect_punct(";");
                const EdgeType *d = lookup_type(type);
                if (g.find_edge(id.text))
                    error(id, "duplicate edge '" + id.text + "'");
                if (!d)
                    continue;
                if (static_cast<int>(nodes.size()) != d->arity) {
                    error(type, "arity mismatch: " + d->name + "/" + std::to_string(d->arity) +
                                    " applied to " + std::to_string(nodes.size()) + " nodes");
                    continue;
                }
                Edge e{id.text, *d, {}};
                for (const Token *n : nodes) {
                    e.attachment.emplace_back(n->text);
                    attachments.emplace_back(&id, n);
                }
                g.add_edge(std::move(e));
            } else {
                fail(cur(), "expected 'node', 'edge' or '}', found " + describe(cur()));
            }
        }
        ++pos_;
        for (auto [edge, node] : attachments)
            if (!g.has_node(NodeId(node->text)))
                error(*node, "edge '" + edge->text + "' attaches undeclared node '" + node->text + "'");
        return g;
    }

    void graph_decl(Document &doc)
    {
        ++pos_;
        const Token &name = ident("graph name");
        check_unique(doc.graphs, name, "graph");
        Graph g = graph_body();
        doc.graphs.emplace(name.text, std::move(g));
    }

    void production_decl(Document &doc)
    {
        ++pos_;
        const Token &name = ident("production name");
        check_unique(doc.productions, name, "production");
        expect_punct("{");
        const EdgeType *lhs = nullptr;
        const Token *lhs_tok = nullptr;
        std::optional<std::vector<const Token *>> iface;
        std::optional<Graph> rhs;
        while (!is_punct("}")) {
            if (at_end())
                fail(cur(), "unclosed block: expected '}' before end of input");
            const Token &kw = cur();
            if (is_word("lhs")) {
                ++pos_;
                lhs_tok = &ident("edge type");
                lhs = lookup_type(*lhs_tok);
                expect_punct(";");
            } else if (is_word("interface")) {
                ++pos_;
                iface = ident_list("node name", ";");
                expect_punct(";");
            } else if (is_word("rhs")) {
                ++pos_;
                if (rhs)
                    error(kw, "rhs given twice");
                rhs = graph_body();
            } else {
                fail(kw, "expected 'lhs', 'interface', 'rhs' or '}', found " + describe(kw));
            }
        }
        const Token &close = cur();
        ++pos_;
        if (!lhs_tok || !iface || !rhs) {
            error(close, "production '" + name.text + "' needs lhs, interface and rhs");
            return;
        }
        if (!lhs)
            return;
        Production p{*lhs, std::move(*rhs), {}};
        std::set<std::string> seen;
        bool ok = true;
        for (const Token *t : *iface) {
            if (!seen.insert(t->text).second) {
                error(*t, "interface node '" + t->text + "' repeated");
                ok = false;
            }
            if (!p.rhs.has_node(NodeId(t->text))) {
                error(*t, "interface node '" + t->text + "' is not declared in the rhs");
                ok = false;
            }
            p.interface.emplace_back(t->text);
        }
        if (static_cast<int>(iface->size()) != lhs->arity) {
            error(*lhs_tok, "arity mismatch: interface has " + std::to_string(iface->size()) +
                                " nodes, " + lhs->name + " has arity " + std::to_string(lhs->arity));
            ok = false;
        }
        if (ok)
            doc.productions.emplace(name.text, std::move(p));
    }

    void formula_decl(Document &doc)
    {
        ++pos_;
        const Token &name = ident("formula name");
        check_unique(doc.formulas, name, "formula");
        expect_punct("=");
        Formula f = formula_checked();
        expect_punct(";");
        doc.formulas.emplace(name.text, std::move(f));
    }

    // A named formula reference (`name;`) or an inline formula.
    Formula formula_ref(const Document &doc)
    {
        if (cur().kind == Token::Kind::ident && !kFormulaKeywords.count(cur().text) &&
            lookahead(1).kind == Token::Kind::punct && lookahead(1).text == ";") {
            const Token &t = toks_[pos_++];
            auto it = doc.formulas.find(t.text);
            if (it == doc.formulas.end()) {
                error(t, "unknown formula '" + t.text + "'");
                return Formula::top();
            }
            return it->second;
        }
        return formula_checked();
    }

    void asserted_decl(Document &doc)
    {
        ++pos_;
        const Token &name = ident("asserted production name");
        check_unique(doc.asserted, name, "asserted production");
        expect_punct("{");
        AssertedDecl decl;
        const Token *prod_tok = nullptr;
        std::optional<std::vector<const Token *>> zvars;
        std::vector<std::pair<const Token *, const Token *>> maps;
        while (!is_punct("}")) {
            if (at_end())
                fail(cur(), "unclosed block: expected '}' before end of input");
            const Token &kw = cur();
            if (is_word("production")) {
                ++pos_;
                prod_tok = &ident("production name");
                expect_punct(";");
            } else if (is_word("pre")) {
                ++pos_;
                decl.value.pre = formula_ref(doc);
                expect_punct(";");
            } else if (is_word("post")) {
                ++pos_;
                decl.value.post = formula_ref(doc);
                expect_punct(";");
            } else if (is_word("zvars")) {
                ++pos_;
                zvars = ident_list("variable name", ";");
                expect_punct(";");
            } else if (is_word("map")) {
                ++pos_;
                const Token &x = ident("variable name");
                expect_punct("->");
                const Token &n = ident("node name");
                expect_punct(";");
                maps.emplace_back(&x, &n);
            } else {
                fail(kw, "expected 'production', 'pre', 'post', 'zvars', 'map' or '}', found " +
                             describe(kw));
            }
        }
        const Token &close = cur();
        ++pos_;
        if (!prod_tok) {
            error(close, "asserted production '" + name.text + "' names no production");
            return;
        }
        auto it = doc.productions.find(prod_tok->text);
        if (it == doc.productions.end()) {
            error(*prod_tok, "unknown production '" + prod_tok->text + "'");
            return;
        }
        decl.production = prod_tok->text;
        decl.value.production = it->second;
        const auto &p = it->second;
        if (zvars) {
            std::set<std::string> seen;
            for (const Token *z : *zvars) {
                if (!seen.insert(z->text).second)
                    error(*z, "interface variable '" + z->text + "' repeated");
                decl.value.zs.vars.push_back(z->text);
            }
            if (static_cast<int>(zvars->size()) != p.lhs_type.arity)
                error(close, "zvars lists " + std::to_string(zvars->size()) +
                                 " variables, lhs arity is " + std::to_string(p.lhs_type.arity));
        } else {
            decl.value.zs = InterfaceVars::canonical(p.lhs_type.arity);
        }
        std::set<std::string> image;
        for (auto [x, n] : maps) {
            if (!p.rhs.has_node(NodeId(n->text)))
                error(*n, "map target '" + n->text + "' is not a node of the rhs");
            if (!image.insert(n->text).second)
                error(*n, "map is not injective on '" + n->text + "'");
            if (!decl.value.h.emplace(x->text, NodeId(n->text)).second)
                error(*x, "variable '" + x->text + "' mapped twice");
        }
        if (!is_closed(decl.value.pre))
            error(close, "pre-condition of '" + name.text + "' must be closed");
        doc.asserted.emplace(name.text, std::move(decl));
    }

    void style_decl(Document &doc)
    {
        ++pos_;
        const Token &name = ident("style name");
        check_unique(doc.styles, name, "style");
        expect_punct("{");
        StyleDecl decl;
        while (!is_punct("}")) {
            if (at_end())
                fail(cur(), "unclosed block: expected '}' before end of input");
            const Token &kw = cur();
            if (is_word("invariant")) {
                ++pos_;
                decl.invariant = formula_ref(doc);
                expect_punct(";");
            } else if (is_word("rule")) {
                ++pos_;
                const Token &r = ident("asserted production name");
                expect_punct(";");
                if (!doc.asserted.count(r.text))
                    error(r, "unknown asserted production '" + r.text + "'");
                decl.rules.push_back(r.text);
            } else {
                fail(kw, "expected 'invariant', 'rule' or '}', found " + describe(kw));
            }
        }
        const Token &close = cur();
        ++pos_;
        if (!is_closed(decl.invariant))
            error(close, "invariant of style '" + name.text + "' must be closed");
        doc.styles.emplace(name.text, std::move(decl));
    }

    // -- formulas -----------------------------------------------------------

    Formula formula_checked()
    {
        const Token &start = cur();
        Formula f = disjunction();
        // Rebinding is reported during parsing; this catches bound names that
        // also occur free.
        for (const auto &v : free_vars(f)) {
            if (all_bound_.count(v)) {
                error(start, "variable '" + v + "' occurs both free and bound");
                break;
            }
        }
        all_bound_.clear();
        return f;
    }

    struct DepthGuard {
        Parser &p;
        explicit DepthGuard(Parser &parser) : p(parser)
        {
            if (++p.depth_ > kMaxNesting)
                p.fail(p.cur(), "formula nested too deeply");
        }
        ~DepthGuard() { --p.depth_; }
    };

    Formula disjunction()
    {
        DepthGuard guard(*this);
        std::vector<Formula> parts{conjunction()};
        while (is_punct("|")) {
            ++pos_;
            parts.push_back(conjunction());
        }
        return parts.size() == 1 ? parts.front() : Formula::disj(std::move(parts));
    }

    Formula conjunction()
    {
        std::vector<Formula> parts{unary()};
        while (is_punct("&")) {
            ++pos_;
            parts.push_back(unary());
        }
        return parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts));
    }

    Formula unary()
    {
        DepthGuard guard(*this);
        if (is_punct("!")) {
            ++pos_;
            return Formula::negation(unary());
        }
        if (is_punct("(")) {
            ++pos_;
            Formula f = disjunction();
            expect_punct(")");
            return f;
        }
        if (is_word("forall") || is_word("exists"))
            return quantifier();
        return atom();
    }

    Formula quantifier()
    {
        const bool universal = is_word("forall");
        ++pos_;
        const Token &type = ident("edge type");
        expect_punct("(");
        auto vars = ident_list("variable name", ")");
        expect_punct(")");
        expect_punct(".");
        const EdgeType *d = lookup_type(type);
        std::vector<VarName> names;
        std::vector<VarName> pushed;
        for (const Token *v : vars) {
            if (kFormulaKeywords.count(v->text))
                fail(*v, "'" + v->text + "' is a keyword, not a variable");
            if (scope_.count(v->text) ||
                std::find(names.begin(), names.end(), v->text) != names.end()) {
                error(*v, "rebinding bound variable '" + v->text + "'");
            } else {
                scope_.insert(v->text);
                pushed.push_back(v->text);
            }
            all_bound_.insert(v->text);
            names.push_back(v->text);
        }
        if (d && static_cast<int>(names.size()) != d->arity)
            error(type, "arity mismatch: " + d->name + "/" + std::to_string(d->arity) + " binds " +
                            std::to_string(names.size()) + " variables");
        Formula body = disjunction();
        for (const auto &v : pushed)
            scope_.erase(v);
        EdgeType t = d ? *d : EdgeType{type.text, static_cast<int>(names.size()), EdgeKind::concrete};
        return universal ? Formula::forall(std::move(t), std::move(names), std::move(body))
                         : Formula::exists(std::move(t), std::move(names), std::move(body));
    }

    Formula atom()
    {
        if (is_word("true")) {
            ++pos_;
            return Formula::top();
        }
        if (is_word("false")) {
            ++pos_;
            return Formula::bot();
        }
        if (is_word("no")) {
            ++pos_;
            const Token &t1 = ident("edge type");
            const EdgeType *d1 = lookup_type(t1);
            EdgeType e1 = d1 ? *d1 : EdgeType{t1.text, 0, EdgeKind::concrete};
            if (is_punct(",")) {
                ++pos_;
                const Token &t2 = ident("edge type");
                const EdgeType *d2 = lookup_type(t2);
                EdgeType e2 = d2 ? *d2 : EdgeType{t2.text, 0, EdgeKind::concrete};
                return Formula::no_edge2(std::move(e1), std::move(e2));
            }
            return Formula::no_edge(std::move(e1));
        }
        if (cur().kind != Token::Kind::ident)
            fail(cur(), "expected a formula, found " + describe(cur()));
        const Token &x = toks_[pos_++];
        bool equality;
        if (is_punct("="))
            equality = true;
        else if (is_punct("!="))
            equality = false;
        else
            fail(cur(), "expected '=' or '!=' after '" + x.text + "', found " + describe(cur()));
        ++pos_;
        const Token &y = ident("variable name");
        if (kFormulaKeywords.count(y.text))
            fail(y, "'" + y.text + "' is a keyword, not a variable");
        return equality ? Formula::eq(x.text, y.text) : Formula::neq(x.text, y.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> &diags_;
    const Alphabet *alphabet_ = nullptr;
    std::set<VarName> scope_;
    std::set<VarName> all_bound_;
    int depth_ = 0;
};

} // namespace

ParseResult parse(std::string_view text)
{
    ParseResult result;
    std::vector<Token> tokens;
    Diagnostic lex_error;
    if (!Lexer(text).run(tokens, lex_error)) {
        result.diagnostics.push_back(std::move(lex_error));
        return result;
    }
    try {
        Parser parser(std::move(tokens), result.diagnostics);
        Document doc = parser.document();
        if (result.diagnostics.empty())
            result.document = std::move(doc);
    } catch (const Abort &) {
    } catch (const Error &e) {
        result.diagnostics.push_back({0, 0, e.what()});
    }
    return result;
}

Formula parse_formula(std::string_view text, const Alphabet &alphabet)
{
    std::vector<Diagnostic> diags;
    std::vector<Token> tokens;
    Diagnostic lex_error;
    if (!Lexer(text).run(tokens, lex_error))
        throw InputError(to_string(lex_error));
    try {
        Parser parser(std::move(tokens), diags);
        Formula f = parser.standalone_formula(alphabet);
        if (diags.empty())
            return f;
    } catch (const Abort &) {
    }
    throw InputError(to_string(diags.front()));
}

} // namespace adr::dsl
