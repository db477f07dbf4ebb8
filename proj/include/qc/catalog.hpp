// Built-in transcriptions: sectioned text entries and typed loaders.
#pragma once

#include "qc/hopf.hpp"

#include <map>
#include <string>
#include <vector>

namespace qc {

struct CatalogEntry {
    std::string kind, name;
    std::string variant = "adopted";
    std::map<std::string, std::string> meta;
    std::vector<std::string> body;
    std::map<std::string, std::vector<std::string>> sections;

    std::string key() const { return kind + "." + name; }
    std::string location() const { return value("location"); }
    std::string value(const std::string& k, const std::string& fallback = "") const;
    // whitespace-separated metadata list
    std::vector<std::string> list(const std::string& k) const;
    const std::vector<std::string>& section(const std::string& s) const;
};

class Catalog {
public:
    // the entries compiled into the library
    static const Catalog& builtin();
    static Catalog parse(const std::string& text, const std::string& source = "<text>");
    void merge(const Catalog& o);

    bool has(const std::string& key, const std::string& variant = "adopted") const;
    // key is "kind.name"; also accepts an alias declared by the entry
    const CatalogEntry& get(const std::string& key, const std::string& variant = "adopted") const;
    // deterministic (file) order; kind "" lists everything as kind.name
    std::vector<std::string> list(const std::string& kind = "") const;
    const std::vector<CatalogEntry>& entries() const { return entries_; }

private:
    std::vector<CatalogEntry> entries_;
};

// "lhs = rhs" -> lhs - rhs; a line without '=' is taken as is
NCPoly parse_equation(const std::string& line, const Alphabet& al);
std::pair<std::string, std::string> split_definition(const std::string& line);

Alphabet alphabet_of(const CatalogEntry& algebra);
HopfStructure load_algebra(const CatalogEntry& e);
HopfStructure load_algebra(const Catalog& c, const std::string& name);

struct IdealData {
    std::string name, location, variant;
    std::string algebra;
    std::vector<NCPoly> gens;
    std::vector<NCPoly> reps;
};
IdealData load_ideal(const Catalog& c, const std::string& name, const std::string& variant = "adopted");

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

}  // namespace qc
