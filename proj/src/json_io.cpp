#include "taut/json_io.hpp"

#include <stdexcept>

namespace taut {

namespace {

Integer integer_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("json: empty integer string");
    return Integer(s);
}

std::vector<int> int_vector(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: expected array of integers");
    return j.get<std::vector<int>>();
}

}  // namespace

json to_json(const Rational& r) {
    return json{{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

Rational rational_from_json(const json& j) {
    return Rational(integer_from_string(j.at("num").get<std::string>()),
                    integer_from_string(j.at("den").get<std::string>()));
}

json to_json(const TailGraph& graph) {
    json tails = json::array();
    for (const auto& t : graph.tails)
        tails.push_back(json{{"bullet_psi", t.bullet_psi},
                             {"lambda1", t.lambda1},
                             {"Lambda", t.big_lambda}});
    return json{{"g", graph.g},
                {"n", graph.n},
                {"k", graph.k},
                {"root",
                 {{"leg_psi", graph.root.leg_psi},
                  {"star_psi", graph.root.star_psi},
                  {"lambda", graph.root.lambda},
                  {"Lambda", graph.root.big_lambda}}},
                {"tails", tails}};
}

TailGraph tail_graph_from_json(const json& j) {
    TailGraph graph;
    graph.g = j.at("g").get<int>();
    graph.n = j.at("n").get<int>();
    graph.k = j.at("k").get<int>();
    const json& root = j.at("root");
    graph.root.leg_psi = int_vector(root.at("leg_psi"));
    graph.root.star_psi = int_vector(root.at("star_psi"));
    graph.root.lambda = int_vector(root.at("lambda"));
    graph.root.big_lambda = int_vector(root.at("Lambda"));
    for (const json& t : j.at("tails")) {
        TailDecoration tail;
        tail.bullet_psi = t.at("bullet_psi").get<int>();
        tail.lambda1 = t.at("lambda1").get<int>();
        tail.big_lambda = int_vector(t.at("Lambda"));
        graph.tails.push_back(std::move(tail));
    }
    check_structure(graph);
    return canonicalize(std::move(graph));
}

json to_json(const GraphSum& sum) {
    json terms = json::array();
    for (const auto& [graph, coeff] : sum.terms())
        terms.push_back(json{{"graph", to_json(graph)}, {"coeff", to_json(coeff)}});
    return json{{"ambient", {sum.ambient_g(), sum.ambient_n()}}, {"terms", terms}};
}

GraphSum graph_sum_from_json(const json& j) {
    const json& ambient = j.at("ambient");
    GraphSum sum(ambient.at(0).get<int>(), ambient.at(1).get<int>());
    for (const json& t : j.at("terms"))
        sum.add_term(tail_graph_from_json(t.at("graph")), rational_from_json(t.at("coeff")));
    return sum;
}

json wk_cache_to_json(const std::map<TauIndex, Rational>& entries) {
    json list = json::array();
    for (const auto& [idx, value] : entries)
        list.push_back(json{{"g", idx.g}, {"d", idx.d}, {"value", to_json(value)}});
    return json{{"entries", list}};
}

std::map<TauIndex, Rational> wk_cache_from_json(const json& j) {
    std::map<TauIndex, Rational> out;
    for (const json& e : j.at("entries")) {
        TauIndex idx = TauIndex::make(e.at("g").get<int>(), int_vector(e.at("d")));
        out.emplace(std::move(idx), rational_from_json(e.at("value")));
    }
    return out;
}

}  // namespace taut
