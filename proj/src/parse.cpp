#include "vnum/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>

namespace vnum {

namespace {

struct Line {
    int no;
    std::string text;
};

/// Lines with comments stripped; numbering is 1-based and preserved.
std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::string cur;
    int no = 1;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back({no++, cur});
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    lines.push_back({no, cur});
    for (auto& line : lines) {
        size_t hash = line.text.find('#');
        if (hash != std::string::npos)
            line.text.erase(hash);
    }
    return lines;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Tok {
    enum Kind { Ident, Int, Star, Caret, Comma, Sep } kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

/// Tokens of the given lines; every line break becomes one Sep token.
std::vector<Tok> tokenize(const std::vector<Line>& lines) {
    std::vector<Tok> toks;
    for (const auto& line : lines) {
        const std::string& s = line.text;
        size_t i = 0;
        while (i < s.size()) {
            const int col = static_cast<int>(i) + 1;
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (is_ident_start(c)) {
                size_t j = i;
                while (j < s.size() && is_ident_char(s[j]))
                    ++j;
                toks.push_back({Tok::Ident, s.substr(i, j - i), 0, line.no, col});
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                long long v = 0;
                bool overflow = false;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    v = v * 10 + (s[j] - '0');
                    if (v > INT32_MAX)
                        overflow = true;
                    ++j;
                }
                if (overflow)
                    throw ParseError("exponent overflow", line.no, col);
                toks.push_back({Tok::Int, s.substr(i, j - i), v, line.no, col});
                i = j;
            } else if (c == '*') {
                toks.push_back({Tok::Star, "*", 0, line.no, col});
                ++i;
            } else if (c == '^') {
                toks.push_back({Tok::Caret, "^", 0, line.no, col});
                ++i;
            } else if (c == ',') {
                toks.push_back({Tok::Comma, ",", 0, line.no, col});
                ++i;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line.no, col);
            }
        }
        toks.push_back({Tok::Sep, "", 0, line.no, static_cast<int>(s.size()) + 1});
    }
    return toks;
}

int var_index(const Ring& ring, const Tok& t) {
    int idx = ring->index_of(t.text);
    if (idx < 0)
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
    return idx;
}

/// One generator from toks[i..): a run ending at a Comma or Sep token.
/// Appends to gens; an integer literal 0 contributes nothing.
void parse_generator(const std::vector<Tok>& toks, size_t& i, const Ring& ring,
                     std::vector<Monomial>& gens, bool& saw_zero) {
    const Tok& first = toks[i];
    if (first.kind == Tok::Int) {
        ++i;
        if (i < toks.size() && toks[i].kind != Tok::Comma && toks[i].kind != Tok::Sep)
            throw ParseError("a constant cannot carry factors", toks[i].line, toks[i].col);
        if (first.value == 0)
            saw_zero = true;
        else
            gens.push_back(Monomial::unit(ring));
        return;
    }
    std::vector<Exponent> exps(static_cast<size_t>(ring->size()), 0);
    while (true) {
        if (i >= toks.size() || toks[i].kind != Tok::Ident)
            throw ParseError("expected a variable", toks[i].line, toks[i].col);
        const Tok& var = toks[i];
        const int idx = var_index(ring, var);
        long long e = 1;
        ++i;
        if (i < toks.size() && toks[i].kind == Tok::Caret) {
            ++i;
            if (i >= toks.size() || toks[i].kind != Tok::Int)
                throw ParseError("expected an exponent", toks[i - 1].line, toks[i - 1].col + 1);
            e = toks[i].value;
            ++i;
        }
        if (exps[static_cast<size_t>(idx)] > INT32_MAX - e)
            throw ParseError("exponent overflow", var.line, var.col);
        exps[static_cast<size_t>(idx)] = static_cast<Exponent>(exps[static_cast<size_t>(idx)] + e);
        if (i < toks.size() && toks[i].kind == Tok::Star) {
            ++i;
            continue;
        }
        break;
    }
    gens.push_back(Monomial(ring, std::move(exps)));
}

MonomialIdeal parse_ideal_lines(const std::vector<Line>& lines, const Ring& ring) {
    const std::vector<Tok> toks = tokenize(lines);
    std::vector<Monomial> gens;
    bool saw_zero = false;
    bool saw_any = false;
    bool after_comma = false;
    size_t i = 0;
    while (i < toks.size()) {
        if (toks[i].kind == Tok::Sep) {
            ++i;
            continue;
        }
        if (toks[i].kind == Tok::Comma) {
            if (!saw_any || after_comma)
                throw ParseError("empty generator", toks[i].line, toks[i].col);
            after_comma = true;
            ++i;
            continue;
        }
        saw_any = true;
        after_comma = false;
        parse_generator(toks, i, ring, gens, saw_zero);
        if (i < toks.size() && toks[i].kind != Tok::Comma && toks[i].kind != Tok::Sep)
            throw ParseError("expected ',' between generators", toks[i].line, toks[i].col);
    }
    const int last = lines.empty() ? 1 : lines.back().no;
    if (after_comma)
        throw ParseError("expected a generator after ','", last, 1);
    if (!saw_any)
        throw ParseError("empty ideal", last, 1);
    if (gens.empty() && saw_zero)
        return MonomialIdeal::zero(ring);
    return MonomialIdeal(ring, std::move(gens));
}

Ring parse_ring_line(const Line& line) {
    const std::vector<Tok> toks = tokenize({line});
    size_t i = 0;
    if (i >= toks.size() || toks[i].kind != Tok::Ident || toks[i].text != "ring")
        throw ParseError("expected 'ring'", line.no, 1);
    ++i;
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (i < toks.size() && toks[i].kind != Tok::Sep) {
        if (toks[i].kind != Tok::Ident)
            throw ParseError("expected a variable name", toks[i].line, toks[i].col);
        if (!seen.insert(toks[i].text).second)
            throw ParseError("duplicate variable '" + toks[i].text + "'", toks[i].line,
                             toks[i].col);
        names.push_back(toks[i].text);
        ++i;
    }
    if (names.empty())
        throw ParseError("ring declaration without variables", line.no, 5);
    return AmbientRing::make(std::move(names));
}

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool is_ring_line(const std::string& s) {
    const std::string t = trimmed(s);
    return t.size() >= 4 && t.compare(0, 4, "ring") == 0 &&
           (t.size() == 4 || !is_ident_char(t[4]));
}

} // namespace

Ring parse_ring(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    for (const auto& line : lines)
        if (!trimmed(line.text).empty())
            return parse_ring_line(line);
    throw ParseError("expected 'ring'", 1, 1);
}

MonomialIdeal parse_ideal(const std::string& text, const Ring& ring) {
    return parse_ideal_lines(split_lines(text), ring);
}

MonomialPrime parse_prime(const std::string& text, const Ring& ring) {
    const std::vector<Tok> toks = tokenize(split_lines(text));
    std::vector<int> vars;
    std::set<int> seen;
    bool expect_name = true;
    for (const auto& t : toks) {
        if (t.kind == Tok::Sep)
            continue;
        if (expect_name) {
            if (t.kind != Tok::Ident)
                throw ParseError("expected a variable name", t.line, t.col);
            const int idx = var_index(ring, t);
            if (!seen.insert(idx).second)
                throw ParseError("duplicate variable '" + t.text + "'", t.line, t.col);
            vars.push_back(idx);
            expect_name = false;
        } else {
            if (t.kind != Tok::Comma)
                throw ParseError("expected ','", t.line, t.col);
            expect_name = true;
        }
    }
    if (vars.empty() || expect_name)
        throw ParseError("expected a variable name", 1, 1);
    std::sort(vars.begin(), vars.end());
    return MonomialPrime(ring, std::move(vars));
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::map<std::string, int> index;
    std::set<std::pair<int, int>> seen;
    for (const auto& line : split_lines(text)) {
        const std::vector<Tok> toks = tokenize({line});
        std::vector<Tok> names;
        for (const auto& t : toks) {
            if (t.kind == Tok::Sep)
                continue;
            if (t.kind != Tok::Ident && t.kind != Tok::Int)
                throw ParseError("expected a vertex name", t.line, t.col);
            names.push_back(t);
        }
        if (names.empty())
            continue;
        if (names.size() != 2)
            throw ParseError("expected two vertex names", line.no, 1);
        int id[2];
        for (int s = 0; s < 2; ++s) {
            auto it = index.find(names[static_cast<size_t>(s)].text);
            if (it == index.end()) {
                it = index.emplace(names[static_cast<size_t>(s)].text,
                                   static_cast<int>(g.vertices.size()))
                         .first;
                g.vertices.push_back(names[static_cast<size_t>(s)].text);
            }
            id[s] = it->second;
        }
        if (id[0] == id[1])
            throw ParseError("loop edge", line.no, 1);
        auto e = std::minmax(id[0], id[1]);
        if (seen.emplace(e.first, e.second).second)
            g.edges.emplace_back(e.first, e.second);
    }
    if (g.edges.empty())
        throw ParseError("empty edge list", 1, 1);
    return g;
}

ParsedInput parse_input(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    std::vector<std::vector<Line>> blocks(1);
    const Line* ring_line = nullptr;
    bool content_seen = false;
    for (const auto& line : lines) {
        const std::string t = trimmed(line.text);
        if (t == "---") {
            content_seen = true;
            blocks.emplace_back();
            continue;
        }
        if (is_ring_line(line.text)) {
            if (ring_line || content_seen)
                throw ParseError("ring declaration must be the first line", line.no, 1);
            ring_line = &line;
            continue;
        }
        if (!t.empty())
            content_seen = true;
        blocks.back().push_back(line);
    }
    ParsedInput out;
    if (ring_line) {
        out.ring = parse_ring_line(*ring_line);
    } else {
        // Variables in order of first appearance across the document.
        std::vector<std::string> names;
        std::set<std::string> seen;
        for (const auto& block : blocks)
            for (const auto& tok : tokenize(block))
                if (tok.kind == Tok::Ident && seen.insert(tok.text).second)
                    names.push_back(tok.text);
        if (names.empty())
            throw ParseError("no variables to infer a ring from", 1, 1);
        out.ring = AmbientRing::make(std::move(names));
        out.ring_inferred = true;
    }
    for (const auto& block : blocks)
        out.ideals.push_back(parse_ideal_lines(block, out.ring));
    return out;
}

std::string render_monomial(const Monomial& m) { return m.str(); }

std::string render_ideal(const MonomialIdeal& I) {
    if (I.is_zero())
        return "0";
    std::string out;
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (i)
            out += ", ";
        out += I.gens()[i].str();
    }
    return out;
}

std::string render_prime(const MonomialPrime& p) {
    std::string out;
    for (size_t i = 0; i < p.variables().size(); ++i) {
        if (i)
            out += ",";
        out += p.ring()->name(p.variables()[i]);
    }
    return out;
}

} // namespace vnum
