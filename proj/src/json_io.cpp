#include "ncmoments/json_io.hpp"

#include <cinttypes>
#include <cstdio>

namespace ncmoments {

namespace {

/// Shortest round-trip decimal form of a double, for stable numeric output.
std::string double_repr(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    for (int prec = 1; prec <= 16; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
        std::sscanf(shorter, "%lf", &back);
        if (back == x) {
            return shorter;
        }
    }
    return buf;
}

}  // namespace

Json rational_to_json(const Rational& q) {
    Json j;
    j["num"] = q.num().str();
    j["den"] = q.den().str();
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) {
            throw InvalidArgument("rational: object form needs num and den");
        }
        return Rational(BigInt(j.at("num").get<std::string>()),
                        BigInt(j.at("den").get<std::string>()));
    }
    if (j.is_string()) {
        return Rational::from_string(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw InvalidArgument("rational: expected object, string or integer, got " +
                          std::string(j.type_name()));
}

Json partition_to_json(const PairPartition& p) {
    Json j = Json::array();
    for (const auto& [l, r] : p.blocks()) {
        j.push_back(Json::array({l, r}));
    }
    return j;
}

PairPartition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InvalidArgument("partition: expected an array of blocks");
    }
    std::vector<PairPartition::Block> blocks;
    blocks.reserve(j.size());
    for (const Json& b : j) {
        if (!b.is_array() || b.size() != 2) {
            throw InvalidArgument("partition: each block must be a pair [left, right]");
        }
        blocks.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
    }
    // A valid pairing covers 1..2s, so the ground size is twice the block
    // count; the constructor reports anything inconsistent.
    const int ground = 2 * static_cast<int>(blocks.size());
    return PairPartition(ground, std::move(blocks));
}

Json tree_to_json(const OrderedTree& t) {
    auto build = [&](auto&& self, int u) -> Json {
        Json node;
        node["children"] = Json::array();
        for (int c : t.children[static_cast<size_t>(u)]) {
            node["children"].push_back(self(self, c));
        }
        return node;
    };
    return build(build, 0);
}

Json labeled_tree_to_json(const LabeledOrderedTree& t) {
    auto build = [&](auto&& self, int u) -> Json {
        Json node;
        node["label"] = t.labels[static_cast<size_t>(u)];
        node["children"] = Json::array();
        for (int c : t.shape.children[static_cast<size_t>(u)]) {
            node["children"].push_back(self(self, c));
        }
        return node;
    };
    return build(build, 0);
}

namespace {

/// Shared recursive reader; labels collected only when wanted.
int read_tree_node(const Json& j, OrderedTree& shape, std::vector<int>* labels) {
    if (!j.is_object()) {
        throw InvalidArgument("tree: expected an object node");
    }
    const int id = shape.vertex_count();
    shape.children.emplace_back();
    if (labels != nullptr) {
        if (!j.contains("label")) {
            throw InvalidArgument("tree: labeled node without a label");
        }
        labels->push_back(j.at("label").get<int>());
    }
    if (j.contains("children")) {
        for (const Json& c : j.at("children")) {
            // Recurse before indexing: the recursive call grows
            // shape.children and may reallocate it.
            const int child = read_tree_node(c, shape, labels);
            shape.children[static_cast<size_t>(id)].push_back(child);
        }
    }
    return id;
}

}  // namespace

OrderedTree tree_from_json(const Json& j) {
    OrderedTree t;
    read_tree_node(j, t, nullptr);
    return t;
}

LabeledOrderedTree labeled_tree_from_json(const Json& j) {
    LabeledOrderedTree t;
    read_tree_node(j, t.shape, &t.labels);
    return t;
}

Json profile_to_json(const VarianceProfile& p) {
    Json j;
    j["r"] = p.r;
    j["widths"] = Json::array();
    for (const Rational& w : p.widths) {
        j["widths"].push_back(w.to_string());
    }
    j["v"] = Json::array();
    for (const auto& row : p.values) {
        Json jrow = Json::array();
        for (const Rational& v : row) {
            jrow.push_back(v.to_string());
        }
        j["v"].push_back(jrow);
    }
    return j;
}

VarianceProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("v")) {
        throw InvalidArgument("profile: expected an object with fields r and v");
    }
    const int r = j.at("r").get<int>();
    std::vector<std::vector<Rational>> values;
    for (const Json& jrow : j.at("v")) {
        std::vector<Rational> row;
        for (const Json& cell : jrow) {
            row.push_back(rational_from_json(cell));
        }
        values.push_back(std::move(row));
    }
    std::vector<Rational> widths;
    if (j.contains("widths")) {
        for (const Json& w : j.at("widths")) {
            widths.push_back(rational_from_json(w));
        }
    }
    return VarianceProfile(r, std::move(values), std::move(widths));
}

Json moment_result_to_json(const MomentResult& r) {
    Json j;
    j["value"] = rational_to_json(r.value);
    Json contributions = Json::object();
    for (const auto& [p, weight] : r.contributions) {
        contributions[p.to_string()] = rational_to_json(weight);
    }
    j["contributions"] = std::move(contributions);
    return j;
}

Json moment_estimate_to_json(const MomentEstimate& e) {
    Json j;
    j["word"] = e.word.to_string();
    j["n"] = e.n;
    j["trials"] = e.trials;
    j["seed"] = e.seed;
    j["estimate"] = e.mean;
    j["stderr"] = e.stderr_est;
    j["imag_mean"] = e.imag_mean;
    return j;
}

Json convergence_rows_to_json(const std::vector<ConvergenceRow>& rows) {
    Json out = Json::array();
    for (const ConvergenceRow& row : rows) {
        Json j;
        j["n"] = row.n;
        j["r"] = row.r;
        j["trials"] = row.trials;
        j["seed"] = row.seed;
        j["estimate"] = row.estimate;
        j["stderr"] = row.stderr_est;
        j["exact"] = rational_to_json(row.exact);
        j["abs_gap"] = row.abs_gap;
        out.push_back(std::move(j));
    }
    return out;
}

std::string convergence_rows_to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "n,r,trials,seed,estimate,stderr,exact_num,exact_den,abs_gap\n";
    for (const ConvergenceRow& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.r) + ',' +
               std::to_string(row.trials) + ',' + std::to_string(row.seed) + ',' +
               double_repr(row.estimate) + ',' + double_repr(row.stderr_est) + ',' +
               row.exact.num().str() + ',' + row.exact.den().str() + ',' +
               double_repr(row.abs_gap) + '\n';
    }
    return out;
}

}  // namespace ncmoments
