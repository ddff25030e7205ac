#include "hds/json_io.hpp"

#include <stdexcept>

namespace hds {

Json to_json(const Rational &q)
{
    return to_string(q);
}

Json to_json(const Weight &w)
{
    Json a = Json::array();
    for (const auto &c : w.coords())
        a.push_back(to_string(c));
    return a;
}

Json to_json(const std::vector<Weight> &ws)
{
    Json a = Json::array();
    for (const auto &w : ws)
        a.push_back(to_json(w));
    return a;
}

Json to_json(const HermitianPair &pair)
{
    Json params = pair.spec.family == Family::SU ? Json{{"p", pair.spec.p}, {"q", pair.spec.q}} : Json{{"n", pair.spec.n}};
    return {
        {"family", to_string(pair.spec.family)},
        {"name", pair.name()},
        {"params", params},
        {"cascade", to_json(pair.cascade)},
        {"cone_generators", to_json(kirwan_cone(pair))},
        {"beta_min", to_json(pair.beta_min)},
        {"rho_c", to_json(pair.rho_c)},
        {"rho_n", to_json(pair.rho_n)},
        {"z0", to_json(pair.z0)},
        {"compact_positives", to_json(pair.compact_positives)},
        {"noncompact_positives", to_json(pair.noncompact_positives)},
    };
}

Json to_json(const Chamber &c)
{
    return {{"id", c.id}, {"rho_n", to_json(c.rho_n)}, {"noncompact_positives", to_json(c.noncompact_positives)}};
}

Json to_json(const RepDecomposition &rep)
{
    Json terms = Json::array();
    for (const auto &[hw, m] : rep.terms) {
        Json t{{"hw", to_json(hw)}, {"mult", m}};
        if (rep.grading) {
            auto it = rep.grading->find(hw);
            if (it != rep.grading->end())
                t["degree"] = to_string(it->second);
        }
        terms.push_back(std::move(t));
    }
    return {{"terms", terms}};
}

Json to_json(const AdmissibilityVerdict &v)
{
    Json j{{"status", to_string(v.status)}, {"certificate", to_string(v.certificate)}};
    if (v.eta)
        j["eta"] = to_json(*v.eta);
    if (v.witness_ray)
        j["witness_ray"] = to_json(*v.witness_ray);
    if (v.certificate == CertificateKind::InvariantWitness) {
        j["degree"] = v.degree;
        j["k_type"] = to_json(*v.k_type);
    }
    if (v.certificate == CertificateKind::TruncationExhausted)
        j["truncation"] = v.truncation;
    return j;
}

Json to_json(const HMultResult &r)
{
    Json j{{"value", r.value}, {"complete", r.complete}};
    if (r.degree_bound)
        j["degree_bound"] = *r.degree_bound;
    return j;
}

namespace {

Rational rational_from_json(const Json &x)
{
    if (x.is_string())
        return parse_rational(x.get<std::string>());
    if (x.is_number_integer())
        return Rational(std::to_string(x.get<long long>()));
    throw std::invalid_argument("expected a rational string, got " + x.dump());
}

} // namespace

Weight weight_from_json(const Json &j, Ambient ambient, std::size_t dim)
{
    if (!j.is_array() || j.size() != dim)
        throw std::invalid_argument("expected an array of " + std::to_string(dim) + " rationals, got " + j.dump());
    std::vector<Rational> c;
    for (const auto &x : j)
        c.push_back(rational_from_json(x));
    return Weight(ambient, std::move(c));
}

Subgroup subgroup_from_json(const HermitianPair &pair, const Json &j)
{
    if (!j.is_object())
        throw std::invalid_argument("subgroup description must be a JSON object");
    Subgroup s;
    s.name = j.value("name", std::string("custom"));
    s.h_type = j.value("h_type", std::string("torus"));

    const Json &proj = j.at("projection");
    if (!proj.is_array() || proj.empty())
        throw std::invalid_argument("projection must be a nonempty array of rows");
    for (const auto &row : proj) {
        if (!row.is_array() || row.size() != pair.dim())
            throw std::invalid_argument("projection rows must have " + std::to_string(pair.dim()) + " entries");
        Vector r;
        for (const auto &x : row)
            r.push_back(rational_from_json(x));
        s.projection.push_back(std::move(r));
    }
    const std::size_t m = s.projection.size();

    Ambient amb = Ambient::Euclidean;
    if (j.contains("h_ambient")) {
        std::string a = j.at("h_ambient").get<std::string>();
        if (a == "typeA")
            amb = Ambient::TypeA;
        else if (a != "euclidean")
            throw std::invalid_argument("h_ambient must be \"typeA\" or \"euclidean\"");
    }

    if (s.h_type == "K") {
        if (m != pair.dim())
            throw std::invalid_argument("h_type K needs a square projection");
        s.h_datum = pair.compact;
    } else if (s.h_type.size() > 1 && s.h_type[0] == 'A' && !j.contains("h_positives")) {
        std::size_t k = std::stoul(s.h_type.substr(1));
        if (k + 1 != m)
            throw std::invalid_argument("h_type " + s.h_type + " needs " + std::to_string(k + 1) + " projection rows");
        s.h_datum = type_a_datum(m);
    } else if (j.contains("h_positives")) {
        std::vector<Weight> pos;
        for (const auto &w : j.at("h_positives"))
            pos.push_back(weight_from_json(w, amb, m));
        s.h_datum = RootDatum(amb, m, std::move(pos), amb == Ambient::TypeA ? Lattice::IntegralModOnes : Lattice::Integral);
    } else if (s.h_type == "torus") {
        s.h_datum = RootDatum(amb, m, {}, amb == Ambient::TypeA ? Lattice::IntegralModOnes : Lattice::Integral);
    } else {
        throw std::invalid_argument("h_type " + s.h_type + " needs h_positives");
    }

    const Json flags = j.value("flags", Json::object());
    s.is_torus = flags.value("is_torus", s.h_datum.positives().empty());
    s.is_normal_in_K = flags.value("is_normal_in_K", false);
    s.contains_center = flags.value("contains_center", false);
    if (s.is_torus && !s.h_datum.positives().empty())
        throw std::invalid_argument("a torus has no roots");
    return s;
}

} // namespace hds
