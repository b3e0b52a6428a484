#include "rccmerge/ontology.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace rccmerge {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what)
    , line_(line)
    , column_(column)
    , detail_(what)
{
}

ParseError::ParseError(const std::string& source, const ParseError& inner)
    : InputError(source + ":" + std::to_string(inner.line()) + ":" + std::to_string(inner.column()) + ": "
                 + inner.detail())
    , line_(inner.line())
    , column_(inner.column())
    , detail_(inner.detail())
{
}

NormalFormError::NormalFormError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what)
    , line_(line)
    , detail_(what)
{
}

NormalFormError::NormalFormError(const std::string& source, const NormalFormError& inner)
    : InputError(source + ":" + std::to_string(inner.line()) + ": " + inner.detail())
    , line_(inner.line())
    , detail_(inner.detail())
{
}

namespace {

enum class Tok { Ident, Le, Amp, Dot, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

bool is_keyword(const std::string& s)
{
    return s == "some" || s == "bot" || s == "top";
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        std::size_t col = i + 1;
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalnum(c) || c == '_') {
            std::size_t j = i;
            while (j < line.size()
                   && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
            i = j;
        } else if (c == '<' && i + 1 < line.size() && line[i + 1] == '=') {
            out.push_back({Tok::Le, "<=", col});
            i += 2;
        } else {
            Tok k;
            switch (c) {
            case '&': k = Tok::Amp; break;
            case '.': k = Tok::Dot; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            default:
                throw ParseError(line_no, col, std::string("unexpected character '") + line[i] + "'");
            }
            out.push_back({k, std::string(1, line[i]), col});
            ++i;
        }
    }
    out.push_back({Tok::End, "", line.size() + 1});
    return out;
}

// Small concept-expression tree, only used to tell "not EL syntax" apart
// from "EL, but not strict normal form".
struct Expr {
    enum Kind { Atom, Top, Bottom, And, Some } kind;
    std::string name;  // concept name for Atom, role name for Some
    std::vector<Expr> kids;
};

class LineParser {
public:
    LineParser(std::vector<Token> toks, std::size_t line_no) : toks_(std::move(toks)), line_(line_no) {}

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const auto& t = peek();
        std::string found = t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
        throw ParseError(line_, t.column, msg + ", found " + found);
    }

    Token expect(Tok k, const char* what)
    {
        if (peek().kind != k)
            fail(std::string("expected ") + what);
        return take();
    }

    std::string name(const char* what)
    {
        if (peek().kind != Tok::Ident || is_keyword(peek().text))
            fail(std::string("expected ") + what);
        return take().text;
    }

    Expr conjunction()
    {
        Expr first = atom();
        if (peek().kind != Tok::Amp)
            return first;
        Expr conj{Expr::And, "", {std::move(first)}};
        while (peek().kind == Tok::Amp) {
            take();
            conj.kids.push_back(atom());
        }
        return conj;
    }

    Expr atom()
    {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            take();
            Expr e = conjunction();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (t.kind != Tok::Ident)
            fail("expected a concept");
        if (t.text == "bot") {
            take();
            return {Expr::Bottom, "", {}};
        }
        if (t.text == "top") {
            take();
            return {Expr::Top, "", {}};
        }
        if (t.text == "some") {
            take();
            std::string role = name("a role name");
            expect(Tok::Dot, "'.'");
            Expr e{Expr::Some, role, {}};
            e.kids.push_back(atom());
            return e;
        }
        return {Expr::Atom, take().text, {}};
    }

    bool at_end() const { return peek().kind == Tok::End; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

bool is_atom(const Expr& e)
{
    return e.kind == Expr::Atom;
}

std::optional<Axiom> to_normal_form(const Expr& lhs, const Expr& rhs)
{
    if (is_atom(lhs) && is_atom(rhs))
        return Subsumption{ConceptName{lhs.name}, ConceptName{rhs.name}};
    if (lhs.kind == Expr::And && lhs.kids.size() == 2 && is_atom(lhs.kids[0]) && is_atom(lhs.kids[1])
        && rhs.kind == Expr::Bottom)
        return make_disjointness(ConceptName{lhs.kids[0].name}, ConceptName{lhs.kids[1].name});
    if (is_atom(lhs) && rhs.kind == Expr::Some && is_atom(rhs.kids[0]))
        return ExistsRight{ConceptName{lhs.name}, RoleName{rhs.name}, ConceptName{rhs.kids[0].name}};
    if (lhs.kind == Expr::Some && is_atom(lhs.kids[0]) && is_atom(rhs))
        return ExistsLeft{RoleName{lhs.name}, ConceptName{lhs.kids[0].name}, ConceptName{rhs.name}};
    return std::nullopt;
}

enum class Kind { Concept, Role, Individual };

const char* kind_name(Kind k)
{
    switch (k) {
    case Kind::Concept: return "concept";
    case Kind::Role: return "role";
    case Kind::Individual: return "individual";
    }
    return "?";
}

class NameSpaces {
public:
    void use(const std::string& n, Kind k, std::size_t line)
    {
        auto [it, inserted] = kinds_.emplace(n, k);
        if (!inserted && it->second != k)
            throw SignatureError("line " + std::to_string(line) + ": '" + n + "' is used as a "
                                 + kind_name(k) + " but was already used as a " + kind_name(it->second));
    }

private:
    std::map<std::string, Kind> kinds_;
};

void note_axiom_names(NameSpaces& ns, const Axiom& ax, std::size_t line)
{
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Subsumption>) {
                ns.use(a.sub.str(), Kind::Concept, line);
                ns.use(a.sup.str(), Kind::Concept, line);
            } else if constexpr (std::is_same_v<T, Disjointness>) {
                ns.use(a.first.str(), Kind::Concept, line);
                ns.use(a.second.str(), Kind::Concept, line);
            } else if constexpr (std::is_same_v<T, ExistsRight>) {
                ns.use(a.sub.str(), Kind::Concept, line);
                ns.use(a.role.str(), Kind::Role, line);
                ns.use(a.filler.str(), Kind::Concept, line);
            } else {
                ns.use(a.role.str(), Kind::Role, line);
                ns.use(a.filler.str(), Kind::Concept, line);
                ns.use(a.sup.str(), Kind::Concept, line);
            }
        },
        ax);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Ontology parse_ontology(std::string_view text)
{
    std::vector<Axiom> tbox;
    std::vector<Assertion> abox;
    NameSpaces names;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        start = nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty())
            continue;

        LineParser p(tokenize(line, line_no), line_no);
        if (line.find("<=") != std::string_view::npos) {
            Expr lhs = p.conjunction();
            p.expect(Tok::Le, "'<='");
            Expr rhs = p.conjunction();
            if (!p.at_end())
                p.fail("expected end of axiom");
            auto ax = to_normal_form(lhs, rhs);
            if (!ax)
                throw NormalFormError(line_no, "axiom '" + std::string(trim(line))
                                                   + "' is not in strict normal form");
            note_axiom_names(names, *ax, line_no);
            tbox.push_back(std::move(*ax));
        } else {
            std::string pred = p.name("a concept or role name");
            p.expect(Tok::LParen, "'('");
            std::string first = p.name("an individual name");
            if (p.peek().kind == Tok::Comma) {
                p.take();
                std::string second = p.name("an individual name");
                p.expect(Tok::RParen, "')'");
                if (!p.at_end())
                    p.fail("expected end of assertion");
                names.use(pred, Kind::Role, line_no);
                names.use(first, Kind::Individual, line_no);
                names.use(second, Kind::Individual, line_no);
                abox.push_back(RoleAssertion{RoleName{pred}, IndividualName{first}, IndividualName{second}});
            } else {
                p.expect(Tok::RParen, "')' or ','");
                if (!p.at_end())
                    p.fail("expected end of assertion");
                names.use(pred, Kind::Concept, line_no);
                names.use(first, Kind::Individual, line_no);
                abox.push_back(ConceptAssertion{ConceptName{pred}, IndividualName{first}});
            }
        }
        if (nl == text.size())
            break;
    }
    return Ontology(std::move(tbox), std::move(abox));
}

namespace {

std::string read_file(const std::string& path, const char* what)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(std::string("cannot open ") + what + " '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Ontology load_ontology(const std::string& path)
{
    std::string text = read_file(path, "ontology file");
    try {
        return parse_ontology(text);
    } catch (const ParseError& e) {
        throw ParseError(path, e);
    } catch (const NormalFormError& e) {
        throw NormalFormError(path, e);
    } catch (const SignatureError& e) {
        throw SignatureError(path + ": " + e.what());
    }
}

std::vector<std::string> read_profile(const std::string& path)
{
    std::string text = read_file(path, "profile file");
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string_view t = trim(line);
        if (t.empty())
            continue;
        std::filesystem::path p{std::string(t)};
        if (p.is_relative())
            p = base / p;
        out.push_back(p.lexically_normal().string());
    }
    if (out.empty())
        throw InputError("profile file '" + path + "' lists no ontologies");
    return out;
}

}  // namespace rccmerge
