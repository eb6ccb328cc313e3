#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homalg/homalg.h"

namespace {

struct Failure {
    int exit_code;
    std::string message;
};

int exit_for(homalg_status s) {
    switch (s) {
        case HOMALG_OK: return 0;
        case HOMALG_NONISO:
        case HOMALG_ERR_NOT_FOUND: return 1;
        case HOMALG_ERR_MALFORMED:
        case HOMALG_ERR_MISMATCH:
        case HOMALG_ERR_PRECONDITION: return 2;
        case HOMALG_ERR_BUDGET: return 3;
        case HOMALG_ERR_INTERNAL: return 4;
    }
    return 4;
}

class Session {
public:
    Session() : ctx_(homalg_context_new()) {}
    ~Session() {
        for (auto* h : weighted_) homalg_weighted_graph_free(h);
        for (auto* g : labeled_) homalg_labeled_graph_free(g);
        homalg_context_free(ctx_);
    }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    homalg_context* ctx() { return ctx_; }

    void check(homalg_status s) {
        if (s != HOMALG_OK && s != HOMALG_NONISO && s != HOMALG_ERR_NOT_FOUND) {
            throw Failure{exit_for(s), homalg_last_error(ctx_)};
        }
    }

    const homalg_weighted_graph* weighted(const std::string& path) {
        homalg_weighted_graph* h = nullptr;
        check(homalg_weighted_graph_from_json(ctx_, slurp(path).c_str(), &h));
        weighted_.push_back(h);
        return h;
    }

    const homalg_labeled_graph* labeled(const std::string& path) {
        homalg_labeled_graph* g = nullptr;
        check(homalg_labeled_graph_from_json(ctx_, slurp(path).c_str(), &g));
        labeled_.push_back(g);
        return g;
    }

    // Takes ownership of a string returned by the library.
    static std::string take(char* s) {
        std::string out = s == nullptr ? "" : s;
        homalg_string_free(s);
        return out;
    }

private:
    static std::string slurp(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Failure{2, "cannot read " + path};
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    homalg_context* ctx_;
    std::vector<homalg_weighted_graph*> weighted_;
    std::vector<homalg_labeled_graph*> labeled_;
};

// "1:2,2:3" -> {1, 2} (0-based vertices, labels must be exactly 1..k)
std::vector<size_t> parse_pin(const std::string& text) {
    std::vector<std::optional<size_t>> slots;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw Failure{2, "pin entries look like label:vertex"};
        size_t label = 0, vertex = 0;
        try {
            size_t used = 0;
            label = std::stoul(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(item);
            vertex = std::stoul(item.substr(colon + 1), &used);
            if (used != item.size() - colon - 1) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Failure{2, "bad pin entry \"" + item + "\""};
        }
        if (label == 0 || vertex == 0) throw Failure{2, "labels and vertices are 1-based"};
        if (slots.size() < label) slots.resize(label);
        if (slots[label - 1]) throw Failure{2, "label pinned twice"};
        slots[label - 1] = vertex - 1;
    }
    std::vector<size_t> out;
    for (const auto& s : slots) {
        if (!s) throw Failure{2, "pinned labels must be exactly 1..k"};
        out.push_back(*s);
    }
    return out;
}

std::vector<size_t> parse_list(const std::string& text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw Failure{2, "bad list entry \"" + item + "\""};
        }
    }
    return out;
}

std::string summarize(const std::string& cmd, const nlohmann::ordered_json& j) {
    if (j.contains("verdict")) {
        return cmd + ": " + j["verdict"].get<std::string>();
    }
    if (cmd == "hom") return "hom = " + j["value"].get<std::string>();
    if (cmd == "orbits") return "orbits = " + std::to_string(j["orbits"].get<size_t>());
    if (cmd == "rank") {
        return "rank " + std::to_string(j["rank"]["rank_N"].get<size_t>()) + ", orbits " +
               std::to_string(j["rank"]["orbits"].get<size_t>()) +
               (j["rank"]["holds"].get<bool>() ? " (holds)" : " (FAILS)");
    }
    if (cmd == "counterexample") return std::string("violation: ") + (j["violation"].get<bool>() ? "yes" : "no");
    if (cmd == "selftest") return std::string("selftest: ") + (j["passed"].get<bool>() ? "passed" : "FAILED");
    if (cmd == "witness") return j["witness"].is_null() ? "witness: none found within bound" : "witness: found";
    return cmd + ": ok";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted graph homomorphism toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    std::optional<uint64_t> budget;
    app.add_flag("--pretty", pretty, "indent JSON and print a summary on stderr");
    app.add_option("--budget", budget, "operation budget (overrides HOMALG_BUDGET)");

    std::string graph, target, a, b, pin, pin_a, pin_b, pins, mode = "both", ells;
    size_t k = 0, max_vertices = 5, n = 2;
    uint64_t p = 2, seed = 1;

    auto* hom = app.add_subcommand("hom", "hom(G, H), or the pinned count with --pin");
    hom->add_option("--graph", graph)->required();
    hom->add_option("--target", target)->required();
    hom->add_option("--pin", pin);

    auto* contract = app.add_subcommand("contract", "twin-free contraction");
    contract->add_option("--target", target)->required();

    auto* iso = app.add_subcommand("iso", "decide pinned isomorphism");
    iso->add_option("--a", a)->required();
    iso->add_option("--b", b)->required();
    iso->add_option("--pin-a", pin_a);
    iso->add_option("--pin-b", pin_b);
    iso->add_option("--mode", mode)->check(CLI::IsMember({"oracle", "constructive", "both"}));

    auto* witness = app.add_subcommand("witness", "separating simple graph, smaller ones first");
    witness->add_option("--a", a)->required();
    witness->add_option("--b", b)->required();
    witness->add_option("--pin-a", pin_a);
    witness->add_option("--pin-b", pin_b);
    witness->add_option("--pins", pins, "both pinnings as \"PIN_A;PIN_B\"");
    witness->add_option("--max-vertices", max_vertices, "unlabeled vertices searched");

    auto* rank = app.add_subcommand("rank", "connection matrix and tensor ranks");
    rank->add_option("--target", target)->required();
    rank->add_option("--k", k)->required();

    auto* orbits = app.add_subcommand("orbits", "orbits of Aut(H) on k-tuples");
    orbits->add_option("--target", target)->required();
    orbits->add_option("--k", k)->required();

    auto* counter = app.add_subcommand("counterexample", "finite-characteristic counterexample");
    counter->add_option("--p", p)->required();
    counter->add_option("--n", n)->required();
    counter->add_option("--ells", ells)->required();
    counter->add_option("--k", k);

    auto* selftest = app.add_subcommand("selftest", "randomized property suite");
    selftest->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Session s;
    int rc = 0;
    std::string out;
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (budget) {
            homalg_context_set_budget(s.ctx(), *budget);
        } else if (const char* env = std::getenv("HOMALG_BUDGET")) {
            try {
                homalg_context_set_budget(s.ctx(), std::stoull(env));
            } catch (const std::logic_error&) {
                throw Failure{2, "HOMALG_BUDGET must be an integer"};
            }
        }

        char* raw = nullptr;
        homalg_status st = HOMALG_OK;
        if (*hom) {
            const auto* g = s.labeled(graph);
            const auto* h = s.weighted(target);
            if (pin.empty()) {
                st = homalg_hom(s.ctx(), g, h, nullptr, 0, &raw);
            } else {
                const auto pv = parse_pin(pin);
                st = homalg_hom(s.ctx(), g, h, pv.data(), pv.size(), &raw);
            }
        } else if (*contract) {
            homalg_weighted_graph* c = nullptr;
            s.check(homalg_contract(s.ctx(), s.weighted(target), &c));
            st = homalg_weighted_graph_to_json(s.ctx(), c, &raw);
            homalg_weighted_graph_free(c);
        } else if (*iso || *witness) {
            if (!pins.empty()) {
                const auto semi = pins.find(';');
                if (semi == std::string::npos) throw Failure{2, "--pins looks like \"PIN_A;PIN_B\""};
                pin_a = pins.substr(0, semi);
                pin_b = pins.substr(semi + 1);
            }
            const auto pa = parse_pin(pin_a);
            const auto pb = parse_pin(pin_b);
            if (pa.size() != pb.size()) throw Failure{2, "pinnings must have the same number of labels"};
            const auto* ha = s.weighted(a);
            const auto* hb = s.weighted(b);
            if (*iso) {
                const auto m = mode == "oracle" ? HOMALG_MODE_ORACLE
                               : mode == "constructive" ? HOMALG_MODE_CONSTRUCTIVE
                                                        : HOMALG_MODE_BOTH;
                st = homalg_iso(s.ctx(), ha, hb, pa.data(), pb.data(), pa.size(), m, &raw);
            } else {
                st = homalg_witness(s.ctx(), ha, hb, pa.data(), pb.data(), pa.size(), max_vertices, &raw);
            }
        } else if (*rank) {
            st = homalg_rank_report(s.ctx(), s.weighted(target), k, &raw);
        } else if (*orbits) {
            st = homalg_orbits(s.ctx(), s.weighted(target), k, &raw);
        } else if (*counter) {
            const auto ls = parse_list(ells);
            st = homalg_counterexample(s.ctx(), p, n, ls.data(), ls.size(), k, &raw);
        } else if (*selftest) {
            int passed = 0;
            st = homalg_selftest(s.ctx(), seed, &passed, &raw);
            if (st == HOMALG_OK && passed == 0) rc = 1;
        }
        s.check(st);
        if (st != HOMALG_OK) rc = exit_for(st);
        out = Session::take(raw);
    } catch (const Failure& f) {
        nlohmann::ordered_json j;
        j["error"] = f.message;
        j["exit_code"] = f.exit_code;
        out = j.dump();
        rc = f.exit_code;
    }

    if (pretty) {
        const auto j = nlohmann::ordered_json::parse(out);
        std::cout << j.dump(2) << "\n";
        std::cerr << (j.contains("error") ? "error: " + j["error"].get<std::string>() : summarize(cmd, j)) << "\n";
    } else {
        std::cout << out << "\n";
    }
    return rc;
}
