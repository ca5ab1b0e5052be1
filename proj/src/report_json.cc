#include <ctl/report_json.hh>

#include <stdexcept>
#include <string>

using nlohmann::json;
using std::string;
using std::vector;

namespace ctl
{
    namespace
    {
        auto big_to_json(const BigInt & x) -> json
        {
            if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
                return static_cast<std::int64_t>(x);
            return x.str();
        }

        auto big_from_json(const json & j, const char * what) -> BigInt
        {
            if (j.is_number_integer())
                return BigInt(j.get<std::int64_t>());
            if (j.is_string())
                return BigInt(j.get<string>());
            throw std::invalid_argument(string(what) + " must be an integer");
        }

        auto need(const json & j, const char * key) -> const json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw std::invalid_argument(string("missing field '") + key + "'");
            return j[key];
        }

        auto int_list(const json & j, const char * what) -> vector<int>
        {
            if (! j.is_array())
                throw std::invalid_argument(string(what) + " must be a list of vertices");
            vector<int> out;
            for (const auto & x : j) {
                if (! x.is_number_integer())
                    throw std::invalid_argument(string(what) + " must contain integers");
                out.push_back(x.get<int>());
            }
            return out;
        }

        auto list_of_lists(const json & j, const char * what) -> vector<vector<int>>
        {
            if (! j.is_array())
                throw std::invalid_argument(string(what) + " must be a list of lists");
            vector<vector<int>> out;
            for (const auto & x : j)
                out.push_back(int_list(x, what));
            return out;
        }
    }

    auto rational_to_json(const Rational & q) -> json
    {
        return json{{"num", big_to_json(q.num())}, {"den", big_to_json(q.den())}, {"decimal", q.to_decimal(6)}};
    }

    auto rational_from_json(const json & j) -> Rational
    {
        BigInt den = big_from_json(need(j, "den"), "den");
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(big_from_json(need(j, "num"), "num"), den);
    }

    auto report_to_json(const ThresholdReport & report, bool with_witnesses) -> json
    {
        json j{{"schema", "ctl/1"}, {"chi", report.chi}, {"class", to_string(report.class_tag)}, {"threshold", rational_to_json(report.threshold)}};
        if (! with_witnesses)
            return j;
        json w = json::object();
        if (report.forest_witness)
            w["forest"] = {{"coloring", report.forest_witness->coloring.classes},
                {"pair", {report.forest_witness->pair.first, report.forest_witness->pair.second}}};
        if (report.near_acyclic_witness) {
            const auto & na = *report.near_acyclic_witness;
            json trees = json::array();
            for (const auto & t : na.forest.trees) {
                json edges = json::array();
                for (auto [u, v] : t.edges)
                    edges.push_back({u, v});
                trees.push_back({{"vertices", t.vertices}, {"side_a", t.side_a}, {"side_b", t.side_b}, {"edges", edges}});
            }
            w["near_acyclic"] = {{"removed_sets", na.removed_sets}, {"s_set", na.s_set}, {"forest", trees}};
        }
        j["witnesses"] = w;
        return j;
    }

    auto report_from_json(const json & j) -> ThresholdReport
    {
        if (j.contains("schema") && j["schema"] != "ctl/1")
            throw std::invalid_argument("unsupported schema");
        ThresholdReport r;
        const auto & chi = need(j, "chi");
        if (! chi.is_number_integer() || chi.get<std::int64_t>() < 0)
            throw std::invalid_argument("chi must be a non-negative integer");
        r.chi = chi.get<std::size_t>();
        const auto & cls = need(j, "class");
        auto tag = cls.is_string() ? threshold_class_from_string(cls.get<string>()) : std::nullopt;
        if (! tag)
            throw std::invalid_argument("unknown class");
        r.class_tag = *tag;
        r.threshold = rational_from_json(need(j, "threshold"));

        if (j.contains("witnesses")) {
            const auto & w = j["witnesses"];
            if (w.contains("forest")) {
                ForestWitness fw;
                fw.coloring.classes = list_of_lists(need(w["forest"], "coloring"), "coloring");
                auto pair = int_list(need(w["forest"], "pair"), "pair");
                if (pair.size() != 2)
                    throw std::invalid_argument("pair must have two entries");
                fw.pair = {pair[0], pair[1]};
                r.forest_witness = fw;
            }
            if (w.contains("near_acyclic")) {
                const auto & na = w["near_acyclic"];
                NearAcyclicWitness nw;
                nw.removed_sets = list_of_lists(need(na, "removed_sets"), "removed_sets");
                nw.s_set = int_list(need(na, "s_set"), "s_set");
                const auto & trees = need(na, "forest");
                if (! trees.is_array())
                    throw std::invalid_argument("forest must be a list of trees");
                for (const auto & t : trees) {
                    Tree tree;
                    tree.vertices = int_list(need(t, "vertices"), "vertices");
                    tree.side_a = int_list(need(t, "side_a"), "side_a");
                    tree.side_b = int_list(need(t, "side_b"), "side_b");
                    for (const auto & e : list_of_lists(need(t, "edges"), "edges")) {
                        if (e.size() != 2)
                            throw std::invalid_argument("edges must be vertex pairs");
                        tree.edges.emplace_back(e[0], e[1]);
                    }
                    nw.forest.trees.push_back(std::move(tree));
                }
                r.near_acyclic_witness = std::move(nw);
            }
        }
        return r;
    }
}
