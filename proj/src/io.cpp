#include "specht/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace specht {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

long long to_ll(const std::string& s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

}  // namespace

std::string format_multipartition(const Multipartition& mp) {
    std::ostringstream os;
    os << mp;
    return os.str();
}

Multipartition parse_multipartition(const std::string& s) {
    // [[3,2,1],[],[1]]
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("bad multipartition: " + s);
    std::vector<std::vector<int>> comps;
    size_t i = 1;
    while (i < s.size() - 1) {
        if (s[i] == ',') { ++i; continue; }
        if (s[i] != '[') throw std::invalid_argument("bad multipartition: " + s);
        size_t j = s.find(']', i);
        if (j == std::string::npos) throw std::invalid_argument("bad multipartition: " + s);
        std::string inner = s.substr(i + 1, j - i - 1);
        std::vector<int> part;
        if (!inner.empty())
            for (auto& tok : split(inner, ','))
                part.push_back(static_cast<int>(to_ll(tok)));
        comps.push_back(std::move(part));
        i = j + 1;
    }
    if (comps.empty()) throw std::invalid_argument("bad multipartition: " + s);
    return Multipartition(std::move(comps));
}

std::string format_int_list(const std::vector<int>& xs) {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < xs.size(); ++k) {
        if (k) os << ',';
        os << xs[k];
    }
    os << ']';
    return os.str();
}

std::vector<int> parse_int_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("bad list: " + s);
    std::string inner = s.substr(1, s.size() - 2);
    std::vector<int> out;
    if (!inner.empty())
        for (auto& tok : split(inner, ','))
            out.push_back(static_cast<int>(to_ll(tok)));
    return out;
}

std::string format_residues(const std::vector<int>& nu) {
    std::ostringstream os;
    for (size_t k = 0; k < nu.size(); ++k) {
        if (k) os << ',';
        os << nu[k];
    }
    return os.str();
}

std::vector<int> parse_residues(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (auto& tok : split(s, ',')) out.push_back(static_cast<int>(to_ll(tok)));
    return out;
}

std::string format_laurent(const Laurent& p) {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.coeffs()) {
        if (!first) os << ',';
        first = false;
        os << e << ':' << c;
    }
    return os.str();
}

Laurent parse_laurent(const std::string& s) {
    Laurent p;
    if (s.empty()) return p;
    for (auto& tok : split(s, ',')) {
        auto kv = split(tok, ':');
        if (kv.size() != 2) throw std::invalid_argument("bad laurent: " + s);
        p += Laurent::q_power(static_cast<int>(to_ll(kv[0])), to_ll(kv[1]));
    }
    return p;
}

std::string format_rational(const Rat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

Rat parse_rational(const std::string& s) {
    auto parts = split(s, '/');
    if (parts.empty() || parts.size() > 2) throw std::invalid_argument("bad rational: " + s);
    Int num(parts[0]);
    Int den = parts.size() == 2 ? Int(parts[1]) : Int(1);
    return Rat(num, den);
}

std::string format_node(const Node& a) {
    std::ostringstream os;
    os << a.row << ',' << a.col << ',' << a.comp;
    return os.str();
}

Node parse_node(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw std::invalid_argument("bad node: " + s);
    return Node{static_cast<int>(to_ll(parts[0])), static_cast<int>(to_ll(parts[1])),
                static_cast<int>(to_ll(parts[2]))};
}

std::string make_record(const std::string& type,
                        std::vector<std::pair<std::string, std::string>> fields) {
    std::sort(fields.begin(), fields.end());
    std::ostringstream os;
    os << type;
    for (auto& [k, v] : fields) os << ' ' << k << '=' << v;
    return os.str();
}

std::string Record::field(const std::string& key) const {
    for (auto& [k, v] : fields)
        if (k == key) return v;
    throw std::out_of_range("missing field: " + key);
}

bool Record::has(const std::string& key) const {
    for (auto& [k, v] : fields)
        if (k == key) return true;
    return false;
}

Record parse_record(const std::string& line) {
    Record rec;
    auto toks = split(line, ' ');
    if (toks.empty() || toks[0].empty()) throw std::invalid_argument("empty record");
    rec.type = toks[0];
    for (size_t k = 1; k < toks.size(); ++k) {
        auto eq = toks[k].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad field: " + toks[k]);
        rec.fields.emplace_back(toks[k].substr(0, eq), toks[k].substr(eq + 1));
    }
    std::sort(rec.fields.begin(), rec.fields.end());
    return rec;
}

CartanType JobSpec::cartan() const {
    return affine ? CartanType::affine(rank) : CartanType::infinity();
}

std::string JobSpec::serialize() const {
    std::vector<std::pair<std::string, std::string>> fields;
    fields.emplace_back("command", command);
    fields.emplace_back("type", affine ? "aff" : "inf");
    if (affine) fields.emplace_back("rank", std::to_string(rank));
    fields.emplace_back("charge", format_int_list(charge));
    if (shape) fields.emplace_back("shape", format_multipartition(*shape));
    if (index) fields.emplace_back("i", std::to_string(*index));
    if (node) fields.emplace_back("node", format_node(*node));
    if (max_n) fields.emplace_back("maxn", std::to_string(*max_n));
    if (ops) {
        std::string s;
        for (size_t k = 0; k < ops->size(); ++k) {
            if (k) s += ',';
            s += (*ops)[k];
        }
        fields.emplace_back("ops", s);
    }
    if (nu) fields.emplace_back("nu", format_residues(*nu));
    if (nu2) fields.emplace_back("nu2", format_residues(*nu2));
    return make_record("job", std::move(fields));
}

JobSpec JobSpec::parse(const std::string& line) {
    Record rec = parse_record(line);
    if (rec.type != "job") throw std::invalid_argument("not a job record");
    JobSpec j;
    j.command = rec.field("command");
    j.affine = rec.field("type") == "aff";
    if (j.affine) j.rank = static_cast<int>(to_ll(rec.field("rank")));
    {
        auto xs = parse_int_list(rec.field("charge"));
        j.charge.assign(xs.begin(), xs.end());
    }
    if (rec.has("shape")) j.shape = parse_multipartition(rec.field("shape"));
    if (rec.has("i")) j.index = static_cast<int>(to_ll(rec.field("i")));
    if (rec.has("node")) j.node = parse_node(rec.field("node"));
    if (rec.has("maxn")) j.max_n = static_cast<int>(to_ll(rec.field("maxn")));
    if (rec.has("ops")) {
        std::vector<std::string> ops;
        for (auto& tok : split(rec.field("ops"), ',')) ops.push_back(tok);
        j.ops = ops;
    }
    if (rec.has("nu")) j.nu = parse_residues(rec.field("nu"));
    if (rec.has("nu2")) j.nu2 = parse_residues(rec.field("nu2"));
    return j;
}

bool JobSpec::operator==(const JobSpec& o) const {
    auto opt_mp_eq = [](const std::optional<Multipartition>& x,
                        const std::optional<Multipartition>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x.has_value() || *x == *y;
    };
    auto opt_node_eq = [](const std::optional<Node>& x, const std::optional<Node>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x.has_value() || *x == *y;
    };
    return command == o.command && affine == o.affine && rank == o.rank &&
           charge == o.charge && opt_mp_eq(shape, o.shape) && index == o.index &&
           opt_node_eq(node, o.node) && max_n == o.max_n && ops == o.ops && nu == o.nu &&
           nu2 == o.nu2;
}

std::optional<std::string> DocumentCache::lookup(const std::string& key) const {
    if (!enabled_ || dir_.empty()) return std::nullopt;
    std::ifstream in(dir_ + "/" + key + ".rec", std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void DocumentCache::store(const std::string& key, const std::string& document) const {
    if (!enabled_ || dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    std::string tmp = dir_ + "/." + key + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;
        out << document;
    }
    std::filesystem::rename(tmp, dir_ + "/" + key + ".rec", ec);
    if (ec) std::remove(tmp.c_str());
}

std::string DocumentCache::key_for(const JobSpec& job) {
    static const char* code_version = "spechtc-1";
    std::string payload = std::string(code_version) + "|" + job.serialize();
    // FNV-1a, 64-bit
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("specht-") + buf;
}

}  // namespace specht
