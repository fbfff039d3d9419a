#include "io.hpp"

#include <fstream>
#include <iostream>

#include "hodge/errors.hpp"

namespace cli {

using hodge::MatQ;
using hodge::ParseError;
using hodge::Q;

namespace {

// "r,q" and "r,q,t,side" composite keys.
std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t from = 0;
    while (true) {
        const std::size_t at = s.find(sep, from);
        out.push_back(s.substr(from, at - from));
        if (at == std::string::npos) break;
        from = at + 1;
    }
    return out;
}

int parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("bad integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "'");
    }
}

// Re-throws nlohmann type/shape complaints as ParseError with context.
template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json matrix_to_json(const MatQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

MatQ matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        if (!j.is_array() || j.empty()) throw ParseError("matrix: empty");
        const int rows = static_cast<int>(j.size());
        const int cols = static_cast<int>(j.at(0).size());
        MatQ m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(j.at(i).size()) != cols) {
                throw ParseError("matrix: ragged rows");
            }
            for (int c = 0; c < cols; ++c) {
                m.at(i, c) = Q::parse(j.at(i).at(c).get<std::string>());
            }
        }
        return m;
    });
}

json shape_to_json(const hodge::SemistableShape& sh) {
    json blocks = json::array();
    for (int r = 0; r < sh.s(); ++r) {
        blocks.push_back({{"alpha", sh.alphas()[r].str()},
                          {"length", sh.lengths()[r]}});
    }
    return {{"prime", sh.prime()},
            {"blocks", std::move(blocks)},
            {"weights", sh.weights()}};
}

hodge::SemistableShape shape_from_json(const json& j) {
    return guarded("shape", [&] {
        const long prime = j.at("prime").get<long>();
        std::vector<int> lengths;
        std::vector<Q> alphas;
        for (const json& b : j.at("blocks")) {
            lengths.push_back(b.at("length").get<int>());
            alphas.push_back(Q::parse(b.at("alpha").get<std::string>()));
        }
        const auto weights = j.at("weights").get<std::vector<long>>();
        return hodge::SemistableShape::make(prime, lengths, alphas, weights);
    });
}

json parameter_to_json(const hodge::HodgeParameter& p) {
    json out = shape_to_json(p.shape);
    json mat = json::object();
    const int n = p.shape.n();
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            mat[std::to_string(i) + "," + std::to_string(k)] =
                p.L.at(i - 1, k - 1).str();
        }
    }
    out["matrix"] = std::move(mat);
    return out;
}

hodge::HodgeParameter parameter_from_json(const json& j) {
    const hodge::SemistableShape sh = shape_from_json(j);
    return guarded("parameter", [&] {
        const int n = sh.n();
        MatQ L = MatQ::identity(n);
        for (const auto& [key, val] : j.at("matrix").items()) {
            const auto parts = split(key, ',');
            if (parts.size() != 2) {
                throw ParseError("matrix key '" + key + "' is not 'i,j'");
            }
            const int i = parse_int(parts[0]);
            const int k = parse_int(parts[1]);
            if (i < 1 || k <= i || k > n) {
                throw ParseError("matrix key '" + key +
                                 "' outside the strict upper triangle");
            }
            L.at(i - 1, k - 1) = Q::parse(val.get<std::string>());
        }
        return hodge::HodgeParameter(sh, std::move(L));
    });
}

json bundle_to_json(const hodge::ForwardBundle& b) {
    json levi = json::array();
    for (const auto& lc : b.levi) {
        json blocks = json::array();
        for (const auto& m : lc.blocks) blocks.push_back(matrix_to_json(m));
        levi.push_back({{"u", lc.u.images()}, {"blocks", std::move(blocks)}});
    }
    json cst = json::object();
    for (const auto& [key, m] : b.cst) {
        const std::string k = std::to_string(key.r) + "," +
                              std::to_string(key.q) + "," +
                              std::to_string(key.t) + "," +
                              (key.quotient ? "quot" : "sub");
        cst[k] = matrix_to_json(m);
    }
    json iota = json::object();
    for (const auto& [key, pair] : b.iota) {
        iota[std::to_string(key.first) + "," + std::to_string(key.second)] = {
            {"two_block", matrix_to_json(pair.two_block)},
            {"induced", matrix_to_json(pair.induced)}};
    }
    return {{"levi", std::move(levi)},
            {"cryst", matrix_to_json(b.cryst.C)},
            {"cst", std::move(cst)},
            {"iota", std::move(iota)}};
}

hodge::ForwardBundle bundle_from_json(const json& j) {
    return guarded("bundle", [&] {
        hodge::ForwardBundle b;
        for (const json& lc : j.at("levi")) {
            hodge::LeviClass entry;
            entry.u = hodge::Perm::from_images(
                lc.at("u").get<std::vector<int>>());
            for (const json& m : lc.at("blocks")) {
                entry.blocks.push_back(matrix_from_json(m));
            }
            b.levi.push_back(std::move(entry));
        }
        b.cryst.C = matrix_from_json(j.at("cryst"));
        for (const auto& [key, m] : j.at("cst").items()) {
            const auto parts = split(key, ',');
            if (parts.size() != 4 || (parts[3] != "sub" && parts[3] != "quot")) {
                throw ParseError("cst key '" + key + "' is not 'r,q,t,side'");
            }
            const hodge::CstKey ck{parse_int(parts[0]), parse_int(parts[1]),
                                   parse_int(parts[2]), parts[3] == "quot"};
            b.cst[ck] = matrix_from_json(m);
        }
        for (const auto& [key, pj] : j.at("iota").items()) {
            const auto parts = split(key, ',');
            if (parts.size() != 2) {
                throw ParseError("iota key '" + key + "' is not 'r,q'");
            }
            hodge::IotaPair pair;
            pair.two_block = matrix_from_json(pj.at("two_block"));
            pair.induced = matrix_from_json(pj.at("induced"));
            b.iota[{parse_int(parts[0]), parse_int(parts[1])}] =
                std::move(pair);
        }
        return b;
    });
}

json extended_to_json(const hodge::SemistableShape& sh,
                      const hodge::ExtendedBundle& b) {
    json out = shape_to_json(sh);
    json windows = json::object();
    for (const auto& [key, bundle] : b.windows) {
        windows[std::to_string(key.first) + "," +
                std::to_string(key.second)] = bundle_to_json(bundle);
    }
    out["windows"] = std::move(windows);
    return out;
}

std::pair<hodge::SemistableShape, hodge::ExtendedBundle> extended_from_json(
    const json& j) {
    const hodge::SemistableShape sh = shape_from_json(j);
    return guarded("windows", [&] {
        hodge::ExtendedBundle b;
        for (const auto& [key, wj] : j.at("windows").items()) {
            const auto parts = split(key, ',');
            if (parts.size() != 2) {
                throw ParseError("window key '" + key + "' is not 'r,q'");
            }
            b.windows[{parse_int(parts[0]), parse_int(parts[1])}] =
                bundle_from_json(wj);
        }
        return std::make_pair(sh, std::move(b));
    });
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_report(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw hodge::Error("cannot write '" + out_path + "'");
    out << text;
}

}  // namespace cli
