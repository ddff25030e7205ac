#include "hds/cli.hpp"

#include "hds/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

namespace hds {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group;
    int p = 0, q = 0, n = 0;
    std::string lambda, big, mu;
    std::optional<int> degree;
    std::string subgroup, subgroup_file;
    int truncate = 6, cutoff = 8;
    std::string item, golden;
};

void add_group_options(CLI::App *cmd, Options &o)
{
    cmd->add_option("--group", o.group, "su or sp")->required()->check(CLI::IsMember({"su", "sp"}));
    cmd->add_option("--p", o.p, "p for SU(p,q)");
    cmd->add_option("--q", o.q, "q for SU(p,q)");
    cmd->add_option("--n", o.n, "n for Sp(n,R)");
}

HermitianPair make_pair(const Options &o)
{
    GroupSpec spec;
    if (o.group == "su") {
        if (o.p < 1 || o.q < 1)
            throw UsageError("--group su needs --p and --q (both >= 1)");
        spec = {Family::SU, o.p, o.q, 0};
    } else {
        if (o.n < 1)
            throw UsageError("--group sp needs --n >= 1");
        spec = {Family::Sp, 0, 0, o.n};
    }
    return build_pair(spec);
}

Weight parse_weight(const std::string &flag, const std::string &text, Ambient ambient, std::size_t dim)
{
    if (text.empty())
        throw UsageError(flag + " is required");
    std::vector<Rational> c;
    try {
        c = parse_rational_list(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(flag + ": " + e.what());
    }
    if (c.size() != dim)
        throw UsageError(flag + " needs " + std::to_string(dim) + " coordinates, got " + std::to_string(c.size()));
    return Weight(ambient, std::move(c));
}

Weight k_weight(const HermitianPair &pair, const std::string &flag, const std::string &text)
{
    return parse_weight(flag, text, pair.ambient(), pair.dim());
}

Subgroup make_subgroup(const HermitianPair &pair, const Options &o, std::istream &in)
{
    if (!o.subgroup_file.empty()) {
        Json j;
        try {
            if (o.subgroup_file == "-") {
                j = Json::parse(in);
            } else {
                std::ifstream f(o.subgroup_file);
                if (!f)
                    throw UsageError("cannot open " + o.subgroup_file);
                j = Json::parse(f);
            }
            return subgroup_from_json(pair, j);
        } catch (const Json::exception &e) {
            throw UsageError(std::string("--subgroup-file: ") + e.what());
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--subgroup-file: ") + e.what());
        }
    }
    if (o.subgroup.empty())
        throw UsageError("--subgroup or --subgroup-file is required");
    return subgroup_preset(pair, o.subgroup);
}

Weight h_weight(const Subgroup &sub, const Options &o)
{
    return parse_weight("--mu", o.mu, sub.h_datum.ambient(), sub.h_dim());
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in)
{
    CLI::App app{"Exact computations for holomorphic and discrete series of SU(p,q) and Sp(n,R)", "hds"};
    app.require_subcommand(0, 1);
    bool pretty = false, version = false;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--version", version, "print the JSON schema version");

    Options o;
    auto sub = [&](const char *name, const char *help) {
        auto *c = app.add_subcommand(name, help);
        c->add_flag("--pretty", pretty, "indent JSON output");
        return c;
    };
    auto *pair_cmd = sub("pair", "root data of the Hermitian pair");
    auto *cascade_cmd = sub("cascade", "strongly orthogonal cascade");
    auto *cone_cmd = sub("cone", "Kirwan cone generators");
    auto *chambers_cmd = sub("chambers", "chambers of the strongly elliptic set");
    auto *bparam_cmd = sub("blattner-param", "Blattner parameter of a Harish-Chandra parameter");
    auto *cond_cmd = sub("condition", "sign condition between lambda and Lambda(lambda)");
    auto *schmid_cmd = sub("schmid", "K-types of S^d(p+)");
    auto *kmult_cmd = sub("kmult", "K-multiplicities of V_Lambda (x) S(p+)");
    auto *blattner_cmd = sub("blattner", "K-multiplicity of a discrete series by the Blattner formula");
    auto *branch_cmd = sub("branch", "restriction of a K-type to a subgroup");
    auto *adm_cmd = sub("admissible", "admissibility of the restriction to a subgroup");
    auto *hmult_cmd = sub("hmult", "H-multiplicity in a holomorphic discrete series");
    auto *dshmult_cmd = sub("ds-hmult", "H-multiplicity in a discrete series");
    auto *verify_cmd = sub("verify-paper", "recompute the golden examples");

    for (auto *c : {pair_cmd, cascade_cmd, cone_cmd, chambers_cmd, bparam_cmd, cond_cmd, schmid_cmd, kmult_cmd,
                    blattner_cmd, branch_cmd, adm_cmd, hmult_cmd, dshmult_cmd})
        add_group_options(c, o);
    for (auto *c : {bparam_cmd, cond_cmd, blattner_cmd, branch_cmd, dshmult_cmd})
        c->add_option("--lambda", o.lambda, "comma-separated rationals");
    for (auto *c : {kmult_cmd, hmult_cmd})
        c->add_option("--Lambda", o.big, "comma-separated rationals");
    for (auto *c : {kmult_cmd, blattner_cmd, hmult_cmd, dshmult_cmd})
        c->add_option("--mu", o.mu, "comma-separated rationals");
    schmid_cmd->add_option("--degree", o.degree)->required();
    kmult_cmd->add_option("--degree", o.degree, "list K-types of this degree instead of one multiplicity");
    for (auto *c : {branch_cmd, adm_cmd, hmult_cmd, dshmult_cmd}) {
        c->add_option("--subgroup", o.subgroup, "torus, center, full, su-p-block, su-q-block, su-n");
        c->add_option("--subgroup-file", o.subgroup_file, "JSON subgroup description, - for stdin");
    }
    for (auto *c : {adm_cmd, hmult_cmd, dshmult_cmd})
        c->add_option("--truncate", o.truncate, "degrees searched for invariants")->check(CLI::NonNegativeNumber);
    for (auto *c : {hmult_cmd, dshmult_cmd})
        c->add_option("--cutoff", o.cutoff, "largest degree summed")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--item", o.item, "run a single item");
    verify_cmd->add_option("--golden", o.golden, "golden JSON file replacing the built-in table");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    auto emit = [&](const Json &j) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; };

    if (version) {
        emit(Json{{"schema_version", kSchemaVersion}});
        return 0;
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return 1;
    }

    try {
        if (verify_cmd->parsed()) {
            Json golden = default_golden();
            if (!o.golden.empty()) {
                std::ifstream f(o.golden);
                if (!f)
                    throw UsageError("cannot open " + o.golden);
                try {
                    golden = Json::parse(f);
                } catch (const Json::exception &e) {
                    throw UsageError(std::string("--golden: ") + e.what());
                }
            }
            auto results = verify_paper(golden, o.item.empty() ? std::nullopt : std::optional<std::string>(o.item));
            Json items = Json::array();
            bool all = true;
            for (const auto &r : results) {
                Json j{{"item", r.item}, {"pass", r.pass}};
                if (!r.pass) {
                    j["expected"] = r.expected;
                    j["actual"] = r.actual;
                }
                items.push_back(std::move(j));
                all = all && r.pass;
            }
            emit(Json{{"items", items}, {"pass", all}});
            return all ? 0 : 3;
        }

        const HermitianPair pair = make_pair(o);
        if (pair_cmd->parsed()) {
            emit(to_json(pair));
        } else if (cascade_cmd->parsed()) {
            emit(Json{{"cascade", to_json(pair.cascade)}});
        } else if (cone_cmd->parsed()) {
            emit(Json{{"cone_generators", to_json(kirwan_cone(pair))}});
        } else if (chambers_cmd->parsed()) {
            Json a = Json::array();
            for (const auto &c : chambers(pair))
                a.push_back(to_json(c));
            emit(Json{{"chambers", a}});
        } else if (bparam_cmd->parsed()) {
            Weight lam = k_weight(pair, "--lambda", o.lambda);
            Weight big = blattner_param(pair, lam);
            emit(Json{{"lambda", to_json(lam)},
                      {"Lambda", to_json(big)},
                      {"chamber", chamber_of(pair, lam).id},
                      {"condition_1_2", condition_hc(pair, lam)}});
        } else if (cond_cmd->parsed()) {
            Weight lam = k_weight(pair, "--lambda", o.lambda);
            emit(Json{{"lambda", to_json(lam)}, {"condition_1_2", condition_hc(pair, lam)}});
        } else if (schmid_cmd->parsed()) {
            emit(to_json(schmid_degree(pair, *o.degree)));
        } else if (kmult_cmd->parsed()) {
            Weight big = k_weight(pair, "--Lambda", o.big);
            if (!o.mu.empty()) {
                emit(Json{{"mult", holo_k_mult(pair, big, k_weight(pair, "--mu", o.mu))}});
            } else {
                if (!o.degree)
                    throw UsageError("kmult needs --mu or --degree");
                if (!in_c_hol(pair, big))
                    throw DomainError("not_in_c_hol", big.str() + " is not in C_hol");
                emit(to_json(holo_k_types(pair, big, *o.degree)));
            }
        } else if (blattner_cmd->parsed()) {
            Weight lam = k_weight(pair, "--lambda", o.lambda);
            Weight mu = k_weight(pair, "--mu", o.mu);
            BlattnerCalculator calc(pair, lam);
            emit(Json{{"Lambda", to_json(calc.blattner_parameter())}, {"mult", calc.mult(mu)}});
        } else if (branch_cmd->parsed()) {
            Subgroup s = make_subgroup(pair, o, in);
            Weight lam = k_weight(pair, "--lambda", o.lambda);
            Json j = to_json(branch_irrep(pair, s, lam));
            j["subgroup"] = s.name;
            emit(j);
        } else if (adm_cmd->parsed()) {
            Subgroup s = make_subgroup(pair, o, in);
            emit(to_json(admissible(pair, s, o.truncate)));
        } else if (hmult_cmd->parsed()) {
            Subgroup s = make_subgroup(pair, o, in);
            Weight big = k_weight(pair, "--Lambda", o.big);
            emit(to_json(h_mult(pair, big, s, h_weight(s, o), o.cutoff, o.truncate)));
        } else if (dshmult_cmd->parsed()) {
            Subgroup s = make_subgroup(pair, o, in);
            Weight lam = k_weight(pair, "--lambda", o.lambda);
            emit(to_json(ds_h_mult(pair, lam, s, h_weight(s, o), o.cutoff, o.truncate)));
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError &e) {
        emit(Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
        return 2;
    }
    return 0;
}

} // namespace hds
