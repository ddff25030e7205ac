#include "hds/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hds {

namespace {

const char *kGolden = R"json({
  "sp4-counterexample": {
    "lambda_in_ghat_d": true,
    "rho_c": ["3/2", "1/2", "-1/2", "-3/2"],
    "rho_n_C": ["5/2", "5/2", "3/2", "-1/2"],
    "shift": ["1", "2", "2", "1"],
    "Lambda": ["6", "5", "3", "-1"],
    "condition_1_2": false
  },
  "su32-values": {
    "rho_c": ["1", "0", "-1", "1/2", "-1/2"],
    "rho_n_C1": ["1", "1", "0", "-1/2", "-3/2"],
    "Lambda": ["3", "2", "0", "-1", "-4"],
    "condition_1_2": false,
    "rho_n_C2_equals_rho_c": true,
    "C2_all_satisfy_condition": true
  },
  "sp2-chambers": {
    "count": 4,
    "shift_in_closure_C2": true,
    "shift_in_closure_C3": true,
    "all_satisfy_condition": true
  },
  "su-pq-admissibility": {
    "SU(1,1)": {"su-p-block": "NotAdmissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(1,2)": {"su-p-block": "NotAdmissible", "su-q-block": "Admissible", "center": "Admissible"},
    "SU(1,3)": {"su-p-block": "NotAdmissible", "su-q-block": "Admissible", "center": "Admissible"},
    "SU(1,4)": {"su-p-block": "NotAdmissible", "su-q-block": "Admissible", "center": "Admissible"},
    "SU(1,5)": {"su-p-block": "NotAdmissible", "su-q-block": "Admissible", "center": "Admissible"},
    "SU(2,1)": {"su-p-block": "Admissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(2,2)": {"su-p-block": "NotAdmissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(2,3)": {"su-p-block": "NotAdmissible", "su-q-block": "Admissible", "center": "Admissible"},
    "SU(2,4)": {"su-p-block": "NotAdmissible", "su-q-block": "Admissible", "center": "Admissible"},
    "SU(3,1)": {"su-p-block": "Admissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(3,2)": {"su-p-block": "Admissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(3,3)": {"su-p-block": "NotAdmissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(4,1)": {"su-p-block": "Admissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(4,2)": {"su-p-block": "Admissible", "su-q-block": "NotAdmissible", "center": "Admissible"},
    "SU(5,1)": {"su-p-block": "Admissible", "su-q-block": "NotAdmissible", "center": "Admissible"}
  },
  "kirwan-cone": {
    "SU(1,1)": [["1", "-1"]],
    "SU(2,3)": [["1", "0", "0", "0", "-1"], ["1", "1", "0", "-1", "-1"]],
    "SU(3,2)": [["1", "0", "0", "0", "-1"], ["1", "1", "0", "-1", "-1"]],
    "SU(3,3)": [["1", "0", "0", "0", "0", "-1"], ["1", "1", "0", "0", "-1", "-1"], ["1", "1", "1", "-1", "-1", "-1"]],
    "Sp(2,R)": [["2", "0"], ["2", "2"]],
    "Sp(3,R)": [["2", "0", "0"], ["2", "2", "0"], ["2", "2", "2"]]
  },
  "blattner-vs-tensor": {
    "mismatches": 0
  }
})json";

Weight su(std::initializer_list<long> c)
{
    return Weight(Ambient::TypeA, c);
}

Weight eu(std::initializer_list<long> c)
{
    return Weight(Ambient::Euclidean, c);
}

Json sp4_counterexample()
{
    auto pair = build_pair({Family::Sp, 0, 0, 4});
    Weight lam = eu({5, 3, 1, -2});
    Weight rn = rho_n_lambda(pair, lam);
    return {
        {"lambda_in_ghat_d", in_ghat_d(pair, lam)},
        {"rho_c", to_json(pair.rho_c)},
        {"rho_n_C", to_json(rn)},
        {"shift", to_json(rn - pair.rho_c)},
        {"Lambda", to_json(blattner_param(pair, lam))},
        {"condition_1_2", condition_hc(pair, lam)},
    };
}

Json su32_values()
{
    auto pair = build_pair({Family::SU, 3, 2, 0});
    Weight lam = su({3, 1, -1, 0, -3});
    // A point of C2 = {l1 > l4 > l2 > l5 > l3}.
    Weight c2 = su({4, 1, -4, 2, -3});
    auto in_c2 = [](const Weight &v) { return v[0] > v[3] && v[3] > v[1] && v[1] > v[4] && v[4] > v[2]; };
    bool all = true;
    for (const auto &x : hc_params_in_box(pair, 6))
        if (in_c2(x) && !condition_hc(pair, x))
            all = false;
    return {
        {"rho_c", to_json(pair.rho_c)},
        {"rho_n_C1", to_json(rho_n_lambda(pair, lam))},
        {"Lambda", to_json(blattner_param(pair, lam))},
        {"condition_1_2", condition_hc(pair, lam)},
        {"rho_n_C2_equals_rho_c", rho_n_lambda(pair, c2) == pair.rho_c},
        {"C2_all_satisfy_condition", all},
    };
}

Json sp2_chambers()
{
    auto pair = build_pair({Family::Sp, 0, 0, 2});
    auto in_closure = [&](const Weight &sample, const Weight &v) {
        if (!is_dominant(pair.compact, v))
            return false;
        for (const auto &b : noncompact_positives_of(pair, sample))
            if (inner(b, v) < 0)
                return false;
        return true;
    };
    // C2 = {t1 > -t2 > 0}, C3 = {-t2 > t1 > 0}.
    Weight s2 = eu({2, -1}), s3 = eu({1, -2});
    bool all = true;
    for (const auto &lam : hc_params_in_box(pair, 10))
        if (!condition_hc(pair, lam))
            all = false;
    return {
        {"count", chambers(pair).size()},
        {"shift_in_closure_C2", in_closure(s2, rho_n_lambda(pair, s2) - pair.rho_c)},
        {"shift_in_closure_C3", in_closure(s3, rho_n_lambda(pair, s3) - pair.rho_c)},
        {"all_satisfy_condition", all},
    };
}

Json su_pq_admissibility()
{
    Json out = Json::object();
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; p + q <= 6; ++q) {
            auto pair = build_pair({Family::SU, p, q, 0});
            Json row = Json::object();
            for (const char *name : {"su-p-block", "su-q-block", "center"})
                row[name] = to_string(admissible(pair, subgroup_preset(pair, name)).status);
            out[pair.name()] = row;
        }
    return out;
}

Json kirwan()
{
    Json out = Json::object();
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 2}, {3, 3}}) {
        auto pair = build_pair({Family::SU, p, q, 0});
        out[pair.name()] = to_json(kirwan_cone(pair));
    }
    for (int n : {2, 3}) {
        auto pair = build_pair({Family::Sp, 0, 0, n});
        out[pair.name()] = to_json(kirwan_cone(pair));
    }
    return out;
}

Json blattner_vs_tensor()
{
    std::int64_t mismatches = 0, checked = 0;
    std::vector<GroupSpec> specs{{Family::Sp, 0, 0, 1}, {Family::Sp, 0, 0, 2}, {Family::SU, 1, 1, 0}, {Family::SU, 2, 1, 0}};
    for (const auto &spec : specs) {
        auto pair = build_pair(spec);
        for (const auto &lam : hc_params_in_box(pair, 3)) {
            if (!in_c_hol(pair, lam))
                continue;
            BlattnerCalculator calc(pair, lam);
            const Weight &big = calc.blattner_parameter();
            for (const auto &mu : dominant_weights_in_degree_window(pair, big, 3)) {
                ++checked;
                if (calc.mult(mu) != holo_k_mult(pair, big, mu))
                    ++mismatches;
            }
        }
    }
    return {{"mismatches", mismatches}, {"checked", checked}};
}

const std::map<std::string, std::function<Json()>> &registry()
{
    static const std::map<std::string, std::function<Json()>> r{
        {"sp4-counterexample", sp4_counterexample}, {"su32-values", su32_values},
        {"sp2-chambers", sp2_chambers},             {"su-pq-admissibility", su_pq_admissibility},
        {"kirwan-cone", kirwan},                    {"blattner-vs-tensor", blattner_vs_tensor},
    };
    return r;
}

} // namespace

const std::vector<std::string> &verify_items()
{
    static const std::vector<std::string> items{"sp4-counterexample", "su32-values",  "sp2-chambers",
                                                "su-pq-admissibility", "kirwan-cone", "blattner-vs-tensor"};
    return items;
}

Json default_golden()
{
    return Json::parse(kGolden);
}

std::vector<VerifyResult> verify_paper(const Json &golden, const std::optional<std::string> &only)
{
    if (only && !registry().count(*only))
        throw DomainError("unknown_item", "no verification item '" + *only + "'");
    std::vector<VerifyResult> out;
    for (const auto &name : verify_items()) {
        if (only && *only != name)
            continue;
        VerifyResult r;
        r.item = name;
        r.expected = golden.contains(name) ? golden.at(name) : Json();
        r.actual = registry().at(name)();
        r.pass = r.expected.is_object() && !r.expected.empty();
        if (r.pass)
            for (const auto &[key, value] : r.expected.items())
                if (!r.actual.contains(key) || r.actual.at(key) != value)
                    r.pass = false;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace hds
