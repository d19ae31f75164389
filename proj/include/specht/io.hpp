#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/laurent.hpp"
#include "specht/rational.hpp"
#include "specht/tableau.hpp"

namespace specht {

std::string format_multipartition(const Multipartition& mp);
Multipartition parse_multipartition(const std::string& s);

std::string format_int_list(const std::vector<int>& xs);      // [a,b,c]
std::vector<int> parse_int_list(const std::string& s);

std::string format_residues(const std::vector<int>& nu);      // a,b,c
std::vector<int> parse_residues(const std::string& s);

std::string format_laurent(const Laurent& p);                 // e:c,e:c ("" for 0)
Laurent parse_laurent(const std::string& s);

std::string format_rational(const Rat& r);                    // p or p/q
Rat parse_rational(const std::string& s);

std::string format_node(const Node& a);                       // r,c,t
Node parse_node(const std::string& s);

// One line per record: "<type> key=value ..." with keys sorted.
std::string make_record(const std::string& type,
                        std::vector<std::pair<std::string, std::string>> fields);
struct Record {
    std::string type;
    std::vector<std::pair<std::string, std::string>> fields;  // sorted by key
    std::string field(const std::string& key) const;
    bool has(const std::string& key) const;
};
Record parse_record(const std::string& line);

// Job description carried in a document header line.
struct JobSpec {
    std::string command;
    bool affine = false;
    int rank = 0;
    Multicharge charge;
    std::optional<Multipartition> shape;
    std::optional<int> index;
    std::optional<Node> node;
    std::optional<int> max_n;
    std::optional<std::vector<std::string>> ops;
    std::optional<std::vector<int>> nu, nu2;

    CartanType cartan() const;
    std::string serialize() const;
    static JobSpec parse(const std::string& line);
    bool operator==(const JobSpec& o) const;
};

// Content-addressed advisory cache of emitted documents.
class DocumentCache {
public:
    DocumentCache(std::string dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}
    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& document) const;
    static std::string key_for(const JobSpec& job);

private:
    std::string dir_;
    bool enabled_;
};

}  // namespace specht
