#ifndef MSW_JSON_IO_HPP
#define MSW_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "msw/ghmodule.hpp"
#include "msw/macdonald.hpp"
#include "msw/partition.hpp"
#include "msw/polygraph.hpp"
#include "msw/polygraph_checks.hpp"
#include "msw/symfunc.hpp"

namespace msw {

using json = nlohmann::ordered_json;

inline json partition_json(const Partition& p) {
    json a = json::array();
    for (int v : p.parts) a.push_back(v);
    return a;
}

inline std::string partition_key(const Partition& p) { return p.str(); }

inline std::string bidegree_key(int r, int s) {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

// {"basis":"s","n":3,"coeffs":{"[3]":"1","[2,1]":"q+t",...}} with the
// coefficient keys in reverse-lex partition order
inline json symfunc_json(const SymFunc& f) {
    json j;
    j["basis"] = std::string(1, basis_letter(f.basis));
    j["n"] = f.n;
    json coeffs = json::object();
    for (const auto& l : enumerate_partitions(f.n)) {
        RatFunc c = f.coeff(l);
        if (!c.is_zero()) coeffs[partition_key(l)] = c.str();
    }
    j["coeffs"] = coeffs;
    return j;
}

// {"mu":[2],"coeffs":{"[2]":"1","[1,1]":"q"}}
inline json htilde_json(const HtildeResult& h) {
    json j;
    j["mu"] = partition_json(h.mu);
    json coeffs = json::object();
    for (const auto& l : enumerate_partitions(h.mu.size())) {
        RatFunc c = h.coeff(l);
        if (!c.is_zero()) coeffs[partition_key(l)] = c.str();
    }
    j["coeffs"] = coeffs;
    return j;
}

inline json ktable_json(const KostkaTable& kt) {
    json j;
    j["n"] = kt.n;
    json parts = json::array();
    for (const auto& p : kt.partitions) parts.push_back(partition_json(p));
    j["partitions"] = parts;
    json cols = json::object();
    for (std::size_t m = 0; m < kt.partitions.size(); ++m) {
        json col = json::object();
        for (std::size_t l = 0; l < kt.partitions.size(); ++l)
            col[partition_key(kt.partitions[l])] = kt.at(l, m).str();
        cols[partition_key(kt.partitions[m])] = col;
    }
    j["ktilde"] = cols;
    return j;
}

inline json positivity_json(const PositivityReport& rep) {
    json j;
    j["n"] = rep.n;
    j["all_positive"] = rep.all_positive;
    json viol = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["lambda"] = partition_json(v.lambda);
        e["mu"] = partition_json(v.mu);
        e["offending"] = v.offending;
        viol.push_back(e);
    }
    j["violations"] = viol;
    j["syt_consistent"] = rep.syt_consistent;
    return j;
}

inline json dims_json(const Partition& mu, const BigradedSpace& space) {
    json j;
    j["mu"] = partition_json(mu);
    json d = json::object();
    for (const auto& [key, dim] : space.dims())
        d[bidegree_key(key.first, key.second)] = dim;
    j["dims"] = d;
    j["total"] = space.total_dim();
    return j;
}

inline json frobenius_json(const FrobeniusSeries& f, int n) {
    json j;
    j["mu"] = partition_json(f.mu);
    json dims = json::object();
    long total = 0;
    for (const auto& [key, sf] : f.slices) {
        long d = 0;
        for (const auto& [l, c] : sf.coeffs)
            d += (c.eval_one_one() * Rat(syt_count_z(l))).num().get_si();
        dims[bidegree_key(key.first, key.second)] = d;
        total += d;
    }
    j["dims"] = dims;
    j["total"] = total;
    json slices = json::object();
    for (const auto& [key, sf] : f.slices)
        slices[bidegree_key(key.first, key.second)] = symfunc_json(sf);
    j["slices"] = slices;
    json flat = json::object();
    SymFunc fl = f.flattened(n);
    for (const auto& l : enumerate_partitions(n)) {
        RatFunc c = fl.coeff(l);
        if (!c.is_zero()) flat[partition_key(l)] = c.str();
    }
    j["flattened"] = flat;
    return j;
}

inline json hilbert_json(const std::string& kind, const ArrangementSpec& spec,
                         int Dx, int Dy,
                         const std::map<std::pair<int, int>, int>& dims) {
    json j;
    j["spec"] = kind;
    j["n"] = spec.n;
    j["l"] = spec.l;
    j["Dx"] = Dx;
    j["Dy"] = Dy;
    json h = json::object();
    for (int dx = 0; dx <= Dx; ++dx)
        for (int dy = 0; dy <= Dy; ++dy) {
            auto it = dims.find({dx, dy});
            h[bidegree_key(dx, dy)] = it == dims.end() ? 0 : it->second;
        }
    j["hilbert"] = h;
    return j;
}

inline json certificate_json(const std::string& check, bool pass,
                             const std::optional<std::pair<int, int>>& disc) {
    json j;
    j["check"] = check;
    j["pass"] = pass;
    if (disc) j["first_discrepancy"] = bidegree_key(disc->first, disc->second);
    else j["first_discrepancy"] = nullptr;
    return j;
}

inline json coinv_json(const CoinvariantDims& c) {
    json j;
    j["n"] = c.n;
    json d = json::object();
    for (const auto& [key, dim] : c.dims)
        d[bidegree_key(key.first, key.second)] = dim;
    j["dims"] = d;
    j["total"] = static_cast<long>(c.total.get_si());
    return j;
}

// --csv support: flatten a JSON object into "path,value" lines
inline void flatten_csv(const json& j, const std::string& prefix,
                        std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten_csv(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::string s;
        for (const auto& v : j) {
            if (!s.empty()) s += " ";
            s += v.is_string() ? v.get<std::string>() : v.dump();
        }
        out += prefix + "," + s + "\n";
    } else {
        out += prefix + ",";
        out += j.is_string() ? j.get<std::string>() : j.dump();
        out += "\n";
    }
}

inline std::string to_csv(const json& j) {
    std::string out;
    flatten_csv(j, "", out);
    return out;
}

}  // namespace msw

#endif
