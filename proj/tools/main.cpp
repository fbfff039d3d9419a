#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hodge/dims.hpp"
#include "hodge/errors.hpp"
#include "hodge/extcomb.hpp"
#include "hodge/forward.hpp"
#include "hodge/jacobian.hpp"
#include "hodge/liealg.hpp"
#include "hodge/parameter.hpp"
#include "hodge/reconstruct.hpp"
#include "hodge/rng.hpp"
#include "hodge/shape.hpp"
#include "hodge/weyl.hpp"
#include "io.hpp"

namespace {

using cli::json;
using namespace hodge;

json roots_to_json(const Roots& r) {
    return json(std::vector<int>(r.begin(), r.end()));
}

json dim_report_to_json(const DimReport& r) {
    json out = json::object();
    for (const auto& e : r.entries) {
        out[e.name] = {{"value", e.value}, {"provenance", e.formula}};
    }
    return out;
}

json report_header(const std::string& command) {
    return {{"schema", "v1"}, {"command", command}};
}

int finish(json& report, bool pass, const std::string& out) {
    report["pass"] = pass;
    cli::write_report(report, out);
    return pass ? 0 : 1;
}

json shape_row(const SemistableShape& sh) {
    return {{"n", sh.n()},
            {"lengths", sh.lengths()},
            {"S0", roots_to_json(sh.S0())},
            {"I0", roots_to_json(sh.I0())}};
}

int cmd_check(const std::string& input, const std::string& out) {
    const HodgeParameter P = cli::parameter_from_json(cli::load_file(input));
    json rep = report_header("check");
    rep["input"] = input;
    rep["shape"] = shape_row(P.shape);
    rep["generic"] = P.shape.is_generic();
    rep["steinberg"] = P.shape.is_steinberg();
    rep["crystalline"] = P.shape.is_crystalline();
    const NonCriticalReport nc = check_non_critical(P);
    rep["non_critical"] = nc.ok;
    bool pass = nc.ok;
    if (!nc.ok) {
        rep["witness"] = {{"u", nc.u.images()}, {"k", nc.k}};
    } else {
        try {
            rep["normal_form"] =
                cli::parameter_to_json(normalize(P))["matrix"];
        } catch (const BoundaryEntryZero& e) {
            rep["normal_form_error"] = e.what();
            pass = false;
        }
    }
    return finish(rep, pass, out);
}

int cmd_forward(const std::string& input, const std::string& out) {
    const HodgeParameter P = cli::parameter_from_json(cli::load_file(input));
    cli::write_report(cli::extended_to_json(P.shape, forward_extended(P)),
                      out);
    return 0;
}

int cmd_reconstruct(const std::string& input, const std::string& out) {
    const auto [sh, bundle] = cli::extended_from_json(cli::load_file(input));
    const HodgeParameter P = reconstruct(bundle, sh);
    cli::write_report(cli::parameter_to_json(P), out);
    return 0;
}

int cmd_roundtrip(const std::string& input, const std::string& out) {
    const json j = cli::load_file(input);
    json rep = report_header("roundtrip");
    rep["input"] = input;
    try {
        if (j.contains("windows")) {
            rep["mode"] = "bundle";
            const auto [sh, bundle] = cli::extended_from_json(j);
            const HodgeParameter P = reconstruct(bundle, sh);
            rep["parameter"] = cli::parameter_to_json(P)["matrix"];
            return finish(rep, true, out);
        }
        rep["mode"] = "parameter";
        const HodgeParameter P = cli::parameter_from_json(j);
        const NonCriticalReport nc = check_non_critical(P);
        if (!nc.ok) {
            rep["witness"] = {{"u", nc.u.images()}, {"k", nc.k}};
            return finish(rep, false, out);
        }
        const HodgeParameter back =
            reconstruct(forward_extended(P), P.shape);
        rep["equivalent"] = equivalent(P, back);
        return finish(rep, rep["equivalent"].get<bool>(), out);
    } catch (const ParseError&) {
        throw;
    } catch (const UnsupportedShape&) {
        throw;
    } catch (const Error& e) {
        rep["error"] = e.what();
        return finish(rep, false, out);
    }
}

json counterexample(const char* kind, const SemistableShape& sh,
                    const HodgeParameter* P, std::uint64_t seed,
                    std::uint64_t salt, const std::string& message) {
    json c = {{"kind", kind},
              {"shape", cli::shape_to_json(sh)},
              {"seed", seed},
              {"salt", salt},
              {"message", message}};
    if (P) c["parameter"] = cli::parameter_to_json(*P);
    return c;
}

void sweep_fern(json& rows, json& cex, bool& pass, Rng& root,
                std::uint64_t seed, int trials, int max_n) {
    std::uint64_t salt = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            Roots S0;
            for (int i = 1; i < n; ++i) {
                if (mask & (1u << (i - 1))) S0.insert(i);
            }
            const SemistableShape sh =
                shape_with_links(n, 2, block_lengths(n, S0), {});
            for (int t = 0; t < trials; ++t) {
                Rng rng = root.child(++salt);
                const HodgeParameter P = random_non_critical(sh, rng);
                try {
                    const FernReport fr = fern_check(P);
                    rows.push_back({{"n", n},
                                    {"S0", roots_to_json(S0)},
                                    {"trial", t},
                                    {"fil", fr.fil_dim},
                                    {"parabolic_sum", fr.parabolic_sum_dim},
                                    {"borel_sum", fr.borel_sum_dim}});
                } catch (const IdentityViolated& e) {
                    pass = false;
                    json c = counterexample("fern", sh, &P, seed, salt,
                                            e.what());
                    c["achieved_dim"] = e.achieved_dim;
                    cex.push_back(std::move(c));
                }
            }
        }
    }
}

void sweep_dims(json& rows, json& cex, bool& pass, Rng& root,
                std::uint64_t seed, int trials, int max_n) {
    std::uint64_t salt = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (const SemistableShape& sh : all_shapes(n)) {
            Rng rng = root.child(++salt);
            try {
                const CrossCheckReport cr = cross_check(sh, trials, rng);
                json row = shape_row(sh);
                row["cross"] = {{"r_plus_id", cr.r_plus_id},
                                {"r_plus_block_rev", cr.r_plus_block_rev},
                                {"rep_count", cr.rep_count},
                                {"multinomial", cr.multinomial},
                                {"borel_sum_dims", cr.borel_sum_dims}};
                row["dims_id"] =
                    dim_report_to_json(deformation_dims(sh, Perm(n)));
                row["dims_block_rev"] = dim_report_to_json(
                    deformation_dims(sh, w0_S0(n, sh.S0())));
                row["rep_side"] = dim_report_to_json(rep_side_dims(sh));
                rows.push_back(std::move(row));
            } catch (const IdentityViolated& e) {
                pass = false;
                json c = counterexample("dims", sh, nullptr, seed, salt,
                                        e.what());
                c["achieved_dim"] = e.achieved_dim;
                cex.push_back(std::move(c));
            }
        }
    }
}

// Labeled interval partition count, by the two-term recurrence.
long f_rec(int k) {
    std::vector<long> f(static_cast<std::size_t>(k) + 1, 0);
    f[0] = 1;
    for (int i = 1; i <= k; ++i) {
        f[i] = 2 * f[i - 1];
        for (int m = 2; m <= i; ++m) f[i] += f[i - m];
    }
    return f[k];
}

std::vector<Roots> subsets_of(const Roots& J) {
    const std::vector<int> elems(J.begin(), J.end());
    std::vector<Roots> out;
    for (unsigned mask = 0; mask < (1u << elems.size()); ++mask) {
        Roots sub;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            if (mask & (1u << k)) sub.insert(elems[k]);
        }
        out.push_back(std::move(sub));
    }
    return out;
}

void sweep_extcomb(json& rows, json& cex, bool& pass, Rng& root,
                   std::uint64_t seed, int trials) {
    json ftab = json::array();
    for (int k = 1; k <= 5; ++k) {
        Roots J;
        for (int i = 1; i <= k; ++i) J.insert(i);
        const LeviStructure ls = LeviStructure::make(k + 1, J);
        const long brute = static_cast<long>(basis(J, {}, ls).size());
        ftab.push_back(
            {{"k", k}, {"brute", brute}, {"recurrence", f_rec(k)}});
        if (brute != f_rec(k)) {
            pass = false;
            cex.push_back({{"kind", "extcomb"},
                           {"seed", seed},
                           {"message", "interval count mismatch"},
                           {"k", k}});
        }
    }
    rows.push_back({{"f_table", std::move(ftab)}});

    Roots full;
    for (int i = 1; i <= 5; ++i) full.insert(i);
    long checked = 0;
    for (const Roots& J : subsets_of(full)) {
        const LeviStructure ls = LeviStructure::make(6, J);
        for (const Roots& I1 : subsets_of(J)) {
            for (const Roots& I2 : subsets_of(I1)) {
                ++checked;
                if (static_cast<long>(basis(I1, I2, ls).size()) !=
                    dim_ext(I1, I2, ls)) {
                    pass = false;
                    cex.push_back({{"kind", "extcomb"},
                                   {"seed", seed},
                                   {"message", "multiplicativity mismatch"},
                                   {"J", roots_to_json(J)},
                                   {"I1", roots_to_json(I1)},
                                   {"I2", roots_to_json(I2)}});
                }
            }
        }
    }
    rows.push_back({{"multiplicativity_nestings", checked}});

    Roots four;
    for (int i = 1; i <= 4; ++i) four.insert(i);
    long pairs = 0;
    for (const Roots& J : subsets_of(four)) {
        const LeviStructure ls = LeviStructure::make(5, J);
        for (const Roots& I2 : subsets_of(J)) {
            for (const Roots& I3 : subsets_of(I2)) {
                std::set<ExtElement> images;
                long seen = 0;
                for (const ExtElement& x : basis(J, I2, ls)) {
                    for (const ExtElement& y : basis(I2, I3, ls)) {
                        images.insert(cup(x, y));
                        ++seen;
                    }
                }
                pairs += seen;
                if (static_cast<long>(images.size()) != seen) {
                    pass = false;
                    cex.push_back({{"kind", "extcomb"},
                                   {"seed", seed},
                                   {"message", "cup not injective"},
                                   {"J", roots_to_json(J)},
                                   {"I2", roots_to_json(I2)},
                                   {"I3", roots_to_json(I3)}});
                }
            }
        }
    }
    rows.push_back({{"cup_pairs", pairs}});

    const std::vector<LeviStructure> structures = {
        LeviStructure::make(2, {1}),
        LeviStructure::make(4, {1, 2, 3}),
        LeviStructure::make(5, {1, 2, 3, 4}),
        LeviStructure::make(6, {1, 2, 4, 5}),
    };
    int good = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = root.child(static_cast<std::uint64_t>(t) + 1);
        const LeviStructure& ls =
            structures[static_cast<std::size_t>(rng.below(0, 3))];
        LsCoordinates coords;
        for (auto [a, b] : ls.components()) {
            for (int s = a; s <= b; ++s) {
                for (int e = s; e <= b; ++e) {
                    coords.entries.push_back(
                        {s, e, Q(rng.below(-9, 9)) / Q(rng.below(1, 9))});
                }
            }
        }
        const LsCoordinates back =
            ls_from_hyperplane(hyperplane_from_ls(coords, ls), ls);
        bool same = back.entries.size() == coords.entries.size();
        for (std::size_t k = 0; same && k < coords.entries.size(); ++k) {
            same = back.entries[k].value == coords.entries[k].value;
        }
        if (same) {
            ++good;
        } else {
            pass = false;
            cex.push_back({{"kind", "extcomb"},
                           {"seed", seed},
                           {"trial", t},
                           {"message", "coordinate round trip mismatch"}});
        }
    }
    rows.push_back({{"roundtrips", good}});
}

void sweep_jacobian(json& rows, json& cex, bool& pass, Rng& root,
                    std::uint64_t seed, int trials, int max_n) {
    std::uint64_t salt = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (const SemistableShape& sh : all_shapes(n)) {
            std::set<int> seen;
            for (int t = 0; t < trials; ++t) {
                Rng rng = root.child(++salt);
                const HodgeParameter P = random_non_critical(sh, rng);
                const int kd = jacobian_kernel_dim(P);
                seen.insert(kd);
                if (kd != sh.s() - 1) {
                    pass = false;
                    json c = counterexample("jacobian", sh, &P, seed, salt,
                                            "kernel dimension off");
                    c["kernel_dim"] = kd;
                    c["expected"] = sh.s() - 1;
                    cex.push_back(std::move(c));
                }
            }
            json row = shape_row(sh);
            row["expected"] = sh.s() - 1;
            row["kernel_dims"] = json(std::vector<int>(seen.begin(), seen.end()));
            rows.push_back(std::move(row));
        }
    }
}

int cmd_sweep(const std::string& kind, std::uint64_t seed, int trials,
              int max_n, const std::string& out) {
    json rep = report_header("sweep");
    rep["kind"] = kind;
    rep["seed"] = seed;
    rep["trials"] = trials;
    rep["max_n"] = max_n;
    json rows = json::array();
    json cex = json::array();
    bool pass = true;
    Rng root(seed);
    if (kind == "fern") {
        sweep_fern(rows, cex, pass, root, seed, trials, max_n);
    } else if (kind == "dims") {
        sweep_dims(rows, cex, pass, root, seed, trials, max_n);
    } else if (kind == "extcomb") {
        sweep_extcomb(rows, cex, pass, root, seed, trials);
    } else {
        sweep_jacobian(rows, cex, pass, root, seed, trials, max_n);
    }
    rep["rows"] = std::move(rows);
    rep["counterexamples"] = std::move(cex);
    return finish(rep, pass, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for semistable Hodge parameter classes"};
    app.require_subcommand(1);

    std::string input, out, kind;
    std::uint64_t seed = 1;
    int trials = 5;
    int max_n = 4;

    CLI::App* c_check =
        app.add_subcommand("check", "validate a parameter file");
    c_check->add_option("input", input, "parameter JSON file")->required();
    c_check->add_option("--out", out, "report file (default stdout)");

    CLI::App* c_forward =
        app.add_subcommand("forward", "emit the window bundles");
    c_forward->add_option("input", input, "parameter JSON file")->required();
    c_forward->add_option("--out", out, "bundle file (default stdout)");

    CLI::App* c_reconstruct = app.add_subcommand(
        "reconstruct", "rebuild the parameter from a bundle file");
    c_reconstruct->add_option("input", input, "bundle JSON file")->required();
    c_reconstruct->add_option("--out", out, "parameter file (default stdout)");

    CLI::App* c_roundtrip = app.add_subcommand(
        "roundtrip", "forward then reconstruct, assert equivalence");
    c_roundtrip->add_option("input", input, "parameter or bundle JSON file")
        ->required();
    c_roundtrip->add_option("--out", out, "report file (default stdout)");

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "run a randomized verification suite");
    c_sweep
        ->add_option("kind", kind, "one of fern, dims, extcomb, jacobian")
        ->required()
        ->check(CLI::IsMember({"fern", "dims", "extcomb", "jacobian"}));
    c_sweep->add_option("--seed", seed, "root seed (default 1)");
    c_sweep->add_option("--trials", trials, "trials per shape (default 5)");
    c_sweep->add_option("--max-n", max_n, "largest n (default 4)");
    c_sweep->add_option("--out", out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_check) return cmd_check(input, out);
        if (*c_forward) return cmd_forward(input, out);
        if (*c_reconstruct) return cmd_reconstruct(input, out);
        if (*c_roundtrip) return cmd_roundtrip(input, out);
        return cmd_sweep(kind, seed, trials, max_n, out);
    } catch (const hodge::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hodge::InvalidShape& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hodge::UnsupportedShape& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return 2;
    } catch (const hodge::Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
