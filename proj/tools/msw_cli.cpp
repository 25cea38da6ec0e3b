// msw-cli: exact Macdonald / Garsia-Haiman / polygraph workbench front end.
//
// Exit codes: 0 = success or passing check, 1 = failing check,
// 2 = usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "msw/cache.hpp"
#include "msw/json_io.hpp"

using namespace msw;

namespace {

struct OutputOpts {
    bool as_json = false;
    bool as_csv = false;
    bool no_cache = false;
    bool long_run = false;
};

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
    cmd->add_flag("--json", o.as_json, "emit JSON");
    cmd->add_flag("--csv", o.as_csv, "emit flattened CSV");
    cmd->add_flag("--no-cache", o.no_cache, "bypass the on-disk result cache");
    cmd->add_flag("--long", o.long_run, "enable heavy instances");
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--mu", "malformed partition part '" +
                                                   item + "'");
        }
    }
    if (parts.empty()) throw CLI::ValidationError("--mu", "empty partition");
    try {
        return Partition(parts);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--mu", e.what());
    }
}

void render_plain(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object()) {
                os << pad << k << ":\n";
                render_plain(v, os, indent + 2);
            } else if (v.is_array()) {
                os << pad << k << ": " << v.dump() << "\n";
            } else {
                os << pad << k << ": "
                   << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

// Runs the computation through the cache and prints in the selected format;
// returns the process exit code.
int emit(const std::string& key, const OutputOpts& opts,
         const std::function<json()>& compute,
         const std::function<int(const json&)>& verdict = {}) {
    CacheConfig cfg = cache_config_from_env(opts.no_cache);
    std::string payload = cache_get_or_compute(
        cfg, key, [&] { return compute().dump(); }, std::cerr);
    json j = json::parse(payload);
    if (opts.as_json) {
        std::cout << j.dump() << "\n";
    } else if (opts.as_csv) {
        std::cout << to_csv(j);
    } else {
        render_plain(j, std::cout);
    }
    return verdict ? verdict(j) : 0;
}

int pass_verdict(const json& j, const char* field = "pass") {
    return j.at(field).get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Macdonald polynomials, Garsia-Haiman "
                 "modules and polygraphs"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- htilde ----
    {
        auto* cmd = app.add_subcommand(
            "htilde", "transformed Macdonald polynomial in the Schur basis");
        auto opts = std::make_shared<OutputOpts>();
        auto mu_str = std::make_shared<std::string>();
        cmd->add_option("--mu", *mu_str, "partition, comma separated")
            ->required();
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, mu_str] {
            Partition mu = parse_partition(*mu_str);
            if (mu.size() > 7)
                throw CLI::ValidationError("--mu", "n <= 7 supported");
            exit_code = emit("htilde|mu=" + mu.str(), *opts, [&] {
                return htilde_json(htilde(mu));
            });
        });
    }

    // ---- ktable ----
    {
        auto* cmd = app.add_subcommand(
            "ktable", "full table of Kostka-Macdonald coefficients");
        auto opts = std::make_shared<OutputOpts>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--n", *n, "degree")->required()->check(
            CLI::Range(1, 7));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, n] {
            exit_code = emit("ktable|n=" + std::to_string(*n), *opts, [&] {
                return ktable_json(ktilde_table(*n));
            });
        });
    }

    // ---- positivity ----
    {
        auto* cmd = app.add_subcommand(
            "positivity", "Macdonald positivity scan of the Ktilde table");
        auto opts = std::make_shared<OutputOpts>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--n", *n, "degree")->required()->check(
            CLI::Range(1, 7));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, n] {
            exit_code = emit(
                "positivity|n=" + std::to_string(*n), *opts,
                [&] { return positivity_json(positivity_report(*n)); },
                [](const json& j) { return pass_verdict(j, "all_positive"); });
        });
    }

    // ---- nfact ----
    {
        auto* cmd = app.add_subcommand(
            "nfact", "dimension of D_mu against n! for all mu up to max-n");
        auto opts = std::make_shared<OutputOpts>();
        auto maxn = std::make_shared<int>(0);
        cmd->add_option("--max-n", *maxn, "largest n")->required()->check(
            CLI::Range(1, 6));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, maxn] {
            if (*maxn >= 6 && !opts->long_run)
                throw CLI::ValidationError("--max-n", "n = 6 requires --long");
            std::string key = "nfact|max-n=" + std::to_string(*maxn);
            exit_code = emit(
                key, *opts,
                [&] {
                    json rows = json::array();
                    bool all = true;
                    for (int n = 1; n <= *maxn; ++n) {
                        mpz_class expect = factorial_z(n);
                        for (const auto& mu : enumerate_partitions(n)) {
                            int dim = dmu_basis(mu).total_dim();
                            bool eq = (dim == expect);
                            all = all && eq;
                            json row;
                            row["mu"] = partition_json(mu);
                            row["dim"] = dim;
                            row["expected"] =
                                static_cast<long>(expect.get_si());
                            row["equal"] = eq;
                            rows.push_back(row);
                        }
                    }
                    json j;
                    j["max_n"] = *maxn;
                    j["results"] = rows;
                    j["pass"] = all;
                    return j;
                },
                [](const json& j) { return pass_verdict(j); });
        });
    }

    // ---- frobenius ----
    {
        auto* cmd = app.add_subcommand("frobenius",
                                       "bigraded Frobenius series of D_mu");
        auto opts = std::make_shared<OutputOpts>();
        auto mu_str = std::make_shared<std::string>();
        cmd->add_option("--mu", *mu_str, "partition")->required();
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, mu_str] {
            Partition mu = parse_partition(*mu_str);
            if (mu.size() > 5 && !opts->long_run)
                throw CLI::ValidationError("--mu", "n > 5 requires --long");
            exit_code = emit("frobenius|mu=" + mu.str(), *opts, [&] {
                return frobenius_json(bigraded_frobenius(mu), mu.size());
            });
        });
    }

    // ---- check-fh ----
    {
        auto* cmd = app.add_subcommand(
            "check-fh",
            "verify the Frobenius series of D_mu equals Htilde_mu");
        auto opts = std::make_shared<OutputOpts>();
        auto mu_str = std::make_shared<std::string>();
        auto maxn = std::make_shared<int>(0);
        auto* om = cmd->add_option("--mu", *mu_str, "single partition");
        auto* on = cmd->add_option("--max-n", *maxn, "all mu up to this n")
                       ->check(CLI::Range(1, 5));
        om->excludes(on);
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, mu_str, maxn] {
            std::vector<Partition> mus;
            if (!mu_str->empty()) {
                mus.push_back(parse_partition(*mu_str));
            } else if (*maxn > 0) {
                for (int n = 1; n <= *maxn; ++n)
                    for (const auto& mu : enumerate_partitions(n))
                        mus.push_back(mu);
            } else {
                throw CLI::ValidationError("check-fh", "need --mu or --max-n");
            }
            for (const auto& mu : mus)
                if (mu.size() > 4 && !opts->long_run)
                    throw CLI::ValidationError("check-fh",
                                               "n = 5 requires --long");
            std::string key = "check-fh|";
            key += mu_str->empty() ? "max-n=" + std::to_string(*maxn)
                                   : "mu=" + mus[0].str();
            exit_code = emit(
                key, *opts,
                [&] {
                    json rows = json::array();
                    bool all = true;
                    for (const auto& mu : mus) {
                        FhReport rep = verify_f_equals_h(mu);
                        all = all && rep.equal;
                        json row;
                        row["mu"] = partition_json(mu);
                        row["equal"] = rep.equal;
                        json diffs = json::object();
                        for (const auto& [l, pr] : rep.diffs) {
                            json d;
                            d["frobenius"] = pr.first.str();
                            d["htilde"] = pr.second.str();
                            diffs[partition_key(l)] = d;
                        }
                        row["diffs"] = diffs;
                        rows.push_back(row);
                    }
                    json j;
                    j["results"] = rows;
                    j["pass"] = all;
                    return j;
                },
                [](const json& j) { return pass_verdict(j); });
        });
    }

    // ---- polygraph-hilbert ----
    {
        auto* cmd = app.add_subcommand(
            "polygraph-hilbert",
            "bigraded Hilbert function of a polygraph or Y arrangement");
        auto opts = std::make_shared<OutputOpts>();
        auto n = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto m = std::make_shared<int>(INT32_MIN);
        auto r = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto dx = std::make_shared<int>(6);
        auto dy = std::make_shared<int>(6);
        cmd->add_option("--n", *n)->required()->check(CLI::Range(1, 3));
        cmd->add_option("--l", *l)->required()->check(CLI::Range(0, 3));
        cmd->add_option("--m", *m, "Y(m,r,k) cut (omit for Z)");
        cmd->add_option("--r", *r);
        cmd->add_option("--k", *k);
        cmd->add_option("--dx", *dx)->check(CLI::Range(0, 8));
        cmd->add_option("--dy", *dy)->check(CLI::Range(0, 8));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, n, l, m, r, k, dx, dy] {
            bool isY = (*m != INT32_MIN);
            if (*r < 0 || *r > *n || *k < 0 || *k > *l)
                throw CLI::ValidationError("polygraph-hilbert",
                                           "need 0 <= r <= n, 0 <= k <= l");
            ArrangementSpec spec =
                isY ? y_arrangement_spec(*n, *l, *m, *r, *k) : z_spec(*n, *l);
            std::ostringstream key;
            key << "polygraph-hilbert|n=" << *n << "|l=" << *l;
            if (isY) key << "|m=" << *m << "|r=" << *r << "|k=" << *k;
            key << "|dx=" << *dx << "|dy=" << *dy;
            exit_code = emit(key.str(), *opts, [&] {
                BivariateHilbert h = hilbert_series(spec, *dx, *dy);
                return hilbert_json(isY ? "Y" : "Z", spec, *dx, *dy, h.dims);
            });
        });
    }

    // ---- polygraph-freeness ----
    {
        auto* cmd = app.add_subcommand(
            "polygraph-freeness",
            "truncated k[y]-freeness certificate for a polygraph");
        auto opts = std::make_shared<OutputOpts>();
        auto n = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto dx = std::make_shared<int>(6);
        auto dy = std::make_shared<int>(6);
        cmd->add_option("--n", *n)->required()->check(CLI::Range(1, 3));
        cmd->add_option("--l", *l)->required()->check(CLI::Range(0, 3));
        cmd->add_option("--dx", *dx)->check(CLI::Range(0, 8));
        cmd->add_option("--dy", *dy)->check(CLI::Range(0, 8));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, n, l, dx, dy] {
            std::ostringstream key;
            key << "polygraph-freeness|n=" << *n << "|l=" << *l
                << "|dx=" << *dx << "|dy=" << *dy;
            exit_code = emit(
                key.str(), *opts,
                [&] {
                    FreenessCertificate c =
                        freeness_certificate(z_spec(*n, *l), *dx, *dy);
                    json j = certificate_json("freeness", c.pass,
                                              c.first_discrepancy);
                    j["n"] = *n;
                    j["l"] = *l;
                    j["dx"] = *dx;
                    j["dy"] = *dy;
                    return j;
                },
                [](const json& j) { return pass_verdict(j); });
        });
    }

    // ---- polygraph-basis2 ----
    {
        auto* cmd = app.add_subcommand(
            "polygraph-basis2", "n=2 explicit common ideal basis verification");
        auto opts = std::make_shared<OutputOpts>();
        auto l = std::make_shared<int>(0);
        auto dx = std::make_shared<int>(6);
        auto dy = std::make_shared<int>(6);
        cmd->add_option("--l", *l)->required()->check(CLI::Range(0, 2));
        cmd->add_option("--dx", *dx)->check(CLI::Range(0, 8));
        cmd->add_option("--dy", *dy)->check(CLI::Range(0, 8));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, l, dx, dy] {
            std::ostringstream key;
            key << "polygraph-basis2|l=" << *l << "|dx=" << *dx << "|dy="
                << *dy;
            exit_code = emit(
                key.str(), *opts,
                [&] {
                    N2BasisReport rep = n2_common_basis(*l, *dx, *dy);
                    json j;
                    j["check"] = "n2-basis";
                    j["l"] = *l;
                    j["dx"] = *dx;
                    j["dy"] = *dy;
                    j["spanning"] = rep.spanning;
                    j["enumerator"] = rep.enumerator_ok;
                    j["membership"] = rep.membership_ok;
                    j["ideal_span"] = rep.ideal_span_ok;
                    j["generators"] = rep.generators_ok;
                    j["pass"] = rep.spanning && rep.enumerator_ok &&
                                rep.membership_ok && rep.ideal_span_ok &&
                                rep.generators_ok;
                    j["first_failure"] = rep.first_failure.empty()
                                             ? json(nullptr)
                                             : json(rep.first_failure);
                    return j;
                },
                [](const json& j) { return pass_verdict(j); });
        });
    }

    // ---- jpower ----
    {
        auto* cmd = app.add_subcommand(
            "jpower",
            "J^d = intersection of (x_i-x_j, y_i-y_j)^d, with freeness");
        auto opts = std::make_shared<OutputOpts>();
        auto n = std::make_shared<int>(0);
        auto d = std::make_shared<int>(0);
        auto dx = std::make_shared<int>(5);
        auto dy = std::make_shared<int>(5);
        cmd->add_option("--n", *n)->required()->check(CLI::Range(2, 3));
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, 3));
        cmd->add_option("--dx", *dx)->check(CLI::Range(0, 8));
        cmd->add_option("--dy", *dy)->check(CLI::Range(0, 8));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, n, d, dx, dy] {
            if (*n >= 3 && *d >= 2 && !opts->long_run)
                throw CLI::ValidationError("jpower",
                                           "(n,d) = (3,2) requires --long");
            std::ostringstream key;
            key << "jpower|n=" << *n << "|d=" << *d << "|dx=" << *dx
                << "|dy=" << *dy;
            exit_code = emit(
                key.str(), *opts,
                [&] {
                    JPowerReport rep = jpower_check(*n, *d, *dx, *dy);
                    json j;
                    j["check"] = "jpower";
                    j["n"] = *n;
                    j["d"] = *d;
                    j["dx"] = *dx;
                    j["dy"] = *dy;
                    j["containment"] = rep.containment;
                    j["equality"] = rep.equality;
                    j["freeness"] = rep.freeness;
                    j["pass"] =
                        rep.containment && rep.equality && rep.freeness;
                    if (rep.first_discrepancy)
                        j["first_discrepancy"] =
                            bidegree_key(rep.first_discrepancy->first,
                                         rep.first_discrepancy->second);
                    else
                        j["first_discrepancy"] = nullptr;
                    return j;
                },
                [](const json& j) { return pass_verdict(j); });
        });
    }

    // ---- coinv ----
    {
        auto* cmd = app.add_subcommand(
            "coinv", "bigraded dimensions of the diagonal coinvariants");
        auto opts = std::make_shared<OutputOpts>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--n", *n)->required()->check(CLI::Range(1, 4));
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, n] {
            exit_code = emit("coinv|n=" + std::to_string(*n), *opts, [&] {
                return coinv_json(diagonal_coinvariants_dims(*n));
            });
        });
    }

    // ---- denominator ----
    {
        auto* cmd = app.add_subcommand(
            "denominator",
            "torus-fixed-point local Hilbert series denominator");
        auto opts = std::make_shared<OutputOpts>();
        auto mu_str = std::make_shared<std::string>();
        cmd->add_option("--mu", *mu_str, "partition")->required();
        add_output_flags(cmd, *opts);
        cmd->callback([&exit_code, opts, mu_str] {
            Partition mu = parse_partition(*mu_str);
            exit_code = emit("denominator|mu=" + mu.str(), *opts, [&] {
                json j;
                j["mu"] = partition_json(mu);
                j["denominator"] = local_hilbert_denominator(mu).str();
                return j;
            });
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors are exit 2 by contract
    } catch (const std::exception& e) {
        std::cerr << "msw: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
