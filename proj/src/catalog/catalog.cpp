#include "qc/catalog.hpp"

#include "qc/parser.hpp"

#include <sstream>

namespace qc {

extern const char* const kCatalogText[];
extern const int kCatalogFiles;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::string CatalogEntry::value(const std::string& k, const std::string& fallback) const {
    auto it = meta.find(k);
    return it == meta.end() ? fallback : it->second;
}

std::vector<std::string> CatalogEntry::list(const std::string& k) const {
    std::vector<std::string> out;
    std::istringstream in(value(k));
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

const std::vector<std::string>& CatalogEntry::section(const std::string& s) const {
    static const std::vector<std::string> none;
    auto it = sections.find(s);
    return it == sections.end() ? none : it->second;
}

Catalog Catalog::parse(const std::string& text, const std::string& source) {
    Catalog c;
    std::istringstream in(text);
    std::string line, sect;
    int lineno = 0;
    CatalogEntry* cur = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto where = [&] { return source + ":" + std::to_string(lineno); };
        if (t.front() == '[') {
            if (t.back() != ']') throw std::runtime_error(where() + ": unterminated header");
            std::istringstream h(t.substr(1, t.size() - 2));
            std::vector<std::string> words;
            for (std::string w; h >> w;) words.push_back(w);
            if (words.size() == 1) {
                if (!cur) throw std::runtime_error(where() + ": section outside an entry");
                sect = words[0];
                cur->sections[sect];
                continue;
            }
            if (words.size() > 3) throw std::runtime_error(where() + ": bad header");
            CatalogEntry e;
            e.kind = words[0];
            e.name = words[1];
            if (words.size() == 3) e.variant = words[2];
            c.entries_.push_back(e);
            cur = &c.entries_.back();
            sect.clear();
            continue;
        }
        if (!cur) throw std::runtime_error(where() + ": content outside an entry");
        size_t colon = t.find(':');
        if (sect.empty() && cur->body.empty() && colon != std::string::npos &&
            t.find_first_not_of("abcdefghijklmnopqrstuvwxyz_") == colon) {
            cur->meta[t.substr(0, colon)] = trim(t.substr(colon + 1));
            continue;
        }
        if (sect.empty())
            cur->body.push_back(t);
        else
            cur->sections[sect].push_back(t);
    }
    return c;
}

void Catalog::merge(const Catalog& o) {
    for (auto& e : o.entries_) {
        for (auto& x : entries_)
            if (x.key() == e.key() && x.variant == e.variant) throw std::runtime_error("duplicate entry " + e.key());
        entries_.push_back(e);
    }
}

const Catalog& Catalog::builtin() {
    static const Catalog c = [] {
        Catalog all;
        for (int k = 0; k < kCatalogFiles; ++k) all.merge(parse(kCatalogText[k], "catalog#" + std::to_string(k)));
        return all;
    }();
    return c;
}

bool Catalog::has(const std::string& key, const std::string& variant) const {
    try {
        get(key, variant);
        return true;
    } catch (const std::out_of_range&) {
        return false;
    }
}

const CatalogEntry& Catalog::get(const std::string& key, const std::string& variant) const {
    const CatalogEntry* fallback = nullptr;
    for (auto& e : entries_) {
        bool match = e.key() == key || (e.kind + "." + e.value("alias")) == key;
        if (!match) continue;
        if (e.variant == variant) return e;
        if (e.variant == "adopted") fallback = &e;
    }
    // entries without a literal reading serve both variants
    if (fallback && variant == "literal") return *fallback;
    throw std::out_of_range("unknown catalog key '" + key + "'");
}

std::vector<std::string> Catalog::list(const std::string& kind) const {
    std::vector<std::string> out;
    for (auto& e : entries_) {
        if (e.variant != "adopted" || e.value("listed") == "no") continue;
        if (kind.empty())
            out.push_back(e.key());
        else if (e.kind == kind)
            out.push_back(e.name);
    }
    return out;
}

std::pair<std::string, std::string> split_definition(const std::string& line) {
    size_t eq = line.find('=');
    if (eq == std::string::npos) return {trim(line), ""};
    return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

NCPoly parse_equation(const std::string& line, const Alphabet& al) {
    auto [l, r] = split_definition(line);
    if (r.empty()) return parse(l, al);
    return parse(l, al) - parse(r, al);
}

Alphabet alphabet_of(const CatalogEntry& e) {
    std::vector<std::pair<std::string, std::string>> star;
    for (auto& p : e.list("star")) {
        auto parts = split(p, '=');
        if (parts.size() != 2) throw std::runtime_error("bad star pair '" + p + "' in " + e.key());
        star.push_back({parts[0], parts[1]});
    }
    return Alphabet(e.list("generators"), star, e.value("param", "k"));
}

HopfStructure load_algebra(const CatalogEntry& e) {
    Alphabet al = alphabet_of(e);
    std::vector<NCPoly> rels;
    for (auto& l : e.section("relations")) rels.push_back(parse_equation(l, al));
    Presentation pres = Presentation::from_relations(al, rels);
    pres.name = e.name;
    // transcribed relations need not be a confluent rule set
    auto rep = pres.complete(std::stoi(e.value("complete_degree", "8")));
    if (rep.unresolved() > 0)
        throw std::runtime_error(e.key() + ": rewrite rules not confluent after completion");
    int n = al.size();
    std::vector<TensorPoly> delta(n);
    std::vector<Scalar> eps(n);
    std::vector<NCPoly> S(n);
    std::vector<int> seen(n, 0);
    for (auto& l : e.section("coproduct")) {
        auto [g, v] = split_definition(l);
        delta[al.id(g)] = parse_tensor(v, al);
        seen[al.id(g)] |= 1;
    }
    for (auto& l : e.section("counit")) {
        auto [g, v] = split_definition(l);
        NCPoly p = parse(v, al);
        if (!p.is_scalar()) throw std::runtime_error("counit of " + g + " is not a scalar");
        eps[al.id(g)] = p.scalar_part();
        seen[al.id(g)] |= 2;
    }
    for (auto& l : e.section("antipode")) {
        auto [g, v] = split_definition(l);
        S[al.id(g)] = parse(v, al);
        seen[al.id(g)] |= 4;
    }
    for (int g = 0; g < n; ++g)
        if (seen[g] != 7) throw std::runtime_error(e.key() + ": incomplete Hopf data for " + al.name(static_cast<Gen>(g)));
    HopfStructure h(std::move(pres), std::move(delta), std::move(eps), std::move(S));
    h.name = e.name;
    h.location = e.location();
    return h;
}

HopfStructure load_algebra(const Catalog& c, const std::string& name) { return load_algebra(c.get("algebra." + name)); }

IdealData load_ideal(const Catalog& c, const std::string& name, const std::string& variant) {
    const CatalogEntry& e = c.get("ideal." + name, variant);
    IdealData d;
    d.name = e.name;
    d.location = e.location();
    d.variant = e.variant;
    d.algebra = e.value("algebra");
    Alphabet al = alphabet_of(c.get("algebra." + d.algebra));
    for (auto& l : e.body) d.gens.push_back(parse_equation(l, al));
    if (!e.value("reps").empty())
        for (auto& r : split(e.value("reps"), ';')) d.reps.push_back(parse(r, al));
    return d;
}

}  // namespace qc
