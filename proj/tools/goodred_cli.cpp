/*
 * goodred: exact arithmetic for point configurations on P^1 with good
 * reduction outside S.  Subcommands cover form enumeration, orbit
 * partitions, omega membership tests, reduction mod p, H^1 computations,
 * six-term exact-sequence checks and the finite-field descent report.
 *
 * Exit codes: 0 success, 1 domain error, 2 usage error, 3 capacity guard.
 */
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "goodred/jsonio.hpp"

using namespace goodred;

namespace {

struct OutputSink {
    std::string path; // empty = stdout
    std::string format = "json";

    void emit(const json& j, const std::string& text_form = "") const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw std::domain_error("cannot open output file: " + path);
            os = &file;
        }
        if (format == "text" && !text_form.empty())
            *os << text_form << "\n";
        else
            *os << j.dump(2) << "\n";
    }
};

void emit_enumerate_csv(const OutputSink& sink,
                        const std::vector<BinaryForm>& forms) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!sink.path.empty()) {
        file.open(sink.path);
        if (!file)
            throw std::domain_error("cannot open output file: " + sink.path);
        os = &file;
    }
    *os << "index,coefficients,discriminant\n";
    for (std::size_t i = 0; i < forms.size(); ++i)
        *os << i << ",\"" << forms[i].str() << "\","
            << discriminant(forms[i]).get_str() << "\n";
}

ZMat parse_matrix(const json& j, int rank) {
    ZMat m;
    if (j.is_number_integer()) {
        if (rank != 1)
            throw std::domain_error("scalar action needs rank 1");
        m = {{Int(static_cast<long>(j.get<long long>()))}};
        return m;
    }
    for (const auto& row : j) {
        std::vector<Int> r;
        for (const auto& v : row)
            r.emplace_back(static_cast<long>(v.get<long long>()));
        m.push_back(std::move(r));
    }
    return m;
}

/* module spec: "Z^r;action=M" or "C[m1,...];action=M" or "Cm;action=M" */
json run_h1(const std::string& group, const std::string& module_spec) {
    if (group.empty() || (group[0] != 'z' && group[0] != 'Z'))
        throw std::domain_error("h1: --group must be zN (cyclic)");
    int n = std::stoi(group.substr(1));
    auto semi = module_spec.find(';');
    if (semi == std::string::npos)
        throw std::domain_error("h1: module spec needs \";action=\"");
    std::string mod_part = module_spec.substr(0, semi);
    std::string act_part = module_spec.substr(semi + 1);
    if (act_part.rfind("action=", 0) != 0)
        throw std::domain_error("h1: module spec needs \"action=\"");
    json act = json::parse(act_part.substr(7));

    FiniteGroup g = FiniteGroup::cyclic(n);
    if (mod_part.rfind("Z^", 0) == 0) {
        int rank = std::stoi(mod_part.substr(2));
        ZMat gen = parse_matrix(act, rank);
        std::vector<ZMat> rho(n);
        rho[0] = zmat_identity(rank);
        for (int i = 1; i < n; ++i)
            rho[i] = zmat_mul(rho[i - 1], gen);
        H1ZrResult res = h1_zr(ZrModule(g, rank, std::move(rho)));
        return h1_zr_json(res);
    }
    if (mod_part.rfind("C", 0) == 0) {
        std::vector<Int> moduli;
        if (mod_part.size() > 1 && mod_part[1] == '[') {
            json arr = json::parse(mod_part.substr(1));
            for (const auto& v : arr)
                moduli.emplace_back(static_cast<long>(v.get<long long>()));
        } else {
            moduli.emplace_back(std::stol(mod_part.substr(1)));
        }
        int rank = static_cast<int>(moduli.size());
        ZMat gen = parse_matrix(act, rank);
        std::vector<ZMat> rho(n);
        rho[0] = zmat_identity(rank);
        for (int i = 1; i < n; ++i)
            rho[i] = zmat_mul(rho[i - 1], gen);
        FiniteZModule mod(g, moduli, std::move(rho));
        Int lattice = h1_order_lattice(mod);
        auto brute = h1_finite(mod.to_ggroup());
        if (lattice != Int(static_cast<long>(brute.size())))
            throw std::domain_error(
                "h1: lattice and brute-force routes disagree");
        return {{"h1_order", int_to_json(lattice)},
                {"classes", brute.size()}};
    }
    throw std::domain_error("h1: module spec must start with Z^ or C");
}

GGroup ggroup_from_json(const FiniteGroup& g, const json& j) {
    FiniteGroup a(j.at("table").get<std::vector<std::vector<int>>>());
    return {g, a, j.at("action").get<std::vector<std::vector<int>>>()};
}

ShortExactSeq sequence_from_json(const json& j) {
    FiniteGroup g(j.at("g").at("table").get<std::vector<std::vector<int>>>());
    return {ggroup_from_json(g, j.at("a")), ggroup_from_json(g, j.at("b")),
            ggroup_from_json(g, j.at("c")), j.at("u").get<std::vector<int>>(),
            j.at("v").get<std::vector<int>>()};
}

ShortExactSeq builtin_sequence(const std::string& name) {
    auto g2 = FiniteGroup::cyclic(2);
    if (name == "z2-z4-z2") {
        auto a = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        auto b = GGroup::trivial_action(g2, FiniteGroup::cyclic(4));
        auto c = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        return {a, b, c, {0, 2}, {0, 1, 0, 1}};
    }
    if (name == "z2-z4-z2-neg") {
        auto a = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        auto b = GGroup::cyclic_on_cyclic(2, 4, -1);
        auto c = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        return {a, b, c, {0, 2}, {0, 1, 0, 1}};
    }
    if (name == "z3-z6-z2") {
        auto a = GGroup::cyclic_on_cyclic(2, 3, -1);
        auto b = GGroup::cyclic_on_cyclic(2, 6, -1);
        auto c = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        return {a, b, c, {0, 2, 4}, {0, 1, 0, 1, 0, 1}};
    }
    if (name == "z2-v4-z2") {
        auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                              FiniteGroup::cyclic(2));
        auto a = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        auto b = GGroup::trivial_action(g2, v4);
        auto c = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        return {a, b, c, {0, 1}, {0, 0, 1, 1}};
    }
    if (name == "center-d4-v4") {
        auto d4 = FiniteGroup::dihedral(4);
        auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                              FiniteGroup::cyclic(2));
        auto a = GGroup::trivial_action(g2, FiniteGroup::cyclic(2));
        auto b = GGroup::trivial_action(g2, d4);
        auto c = GGroup::trivial_action(g2, v4);
        return {a, b, c, {0, 2}, {0, 1, 0, 1, 2, 3, 2, 3}};
    }
    throw std::domain_error("unknown builtin sequence: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for configurations on P^1 with good "
                 "reduction outside S"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string s_csv, output, format = "json";
    app.add_option("--output", output, "write the artifact to a file");
    app.add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    auto* omega = app.add_subcommand(
        "omega-test", "membership of a configuration in Omega");
    std::string points;
    omega->add_option("--points", points, "configuration, e.g. \"1:0,0:1\"")
        ->required();
    omega->add_option("--s", s_csv, "comma separated primes; empty = none");

    auto* enumerate = app.add_subcommand(
        "enumerate", "forms of bounded height with S-unit discriminant");
    int degree = 2;
    long height = 1;
    unsigned bound = 3;
    bool with_orbits = false;
    enumerate->add_option("--degree", degree, "form degree")->required();
    enumerate->add_option("--height", height, "coefficient bound")
        ->required();
    enumerate->add_option("--s", s_csv, "comma separated primes");
    enumerate->add_flag("--orbits", with_orbits,
                        "also partition into (Q,S)-orbits");
    enumerate->add_option("--bound", bound,
                          "search bound for the orbit partition");

    auto* orbits_cmd =
        app.add_subcommand("orbits", "partition given forms into orbits");
    std::string forms_arg;
    orbits_cmd
        ->add_option("--forms", forms_arg,
                     "JSON list of coefficient lists, e.g. [[0,1,0],[1,0,1]]")
        ->required();
    orbits_cmd->add_option("--s", s_csv, "comma separated primes");
    orbits_cmd->add_option("--bound", bound, "witness search bound");

    auto* reduce =
        app.add_subcommand("reduce", "factor pattern of a form mod p");
    std::string form_arg;
    long p_arg = 2;
    reduce->add_option("--form", form_arg, "coefficients [a_n,...,a_0]")
        ->required();
    reduce->add_option("--p", p_arg, "prime modulus")->required();

    auto* h1cmd = app.add_subcommand(
        "h1", "first cohomology of a cyclic group module");
    std::string group_arg, module_arg;
    h1cmd->add_option("--group", group_arg, "acting group, e.g. z2")
        ->required();
    h1cmd
        ->add_option("--module", module_arg,
                     "\"Z^r;action=M\" or \"C[m,...];action=M\"")
        ->required();

    auto* six = app.add_subcommand(
        "six-term", "verify the six-term exact sequence of pointed sets");
    std::string builtin, json_path;
    six->add_option("--builtin", builtin,
                    "z2-z4-z2, z2-z4-z2-neg, z3-z6-z2, z2-v4-z2, "
                    "center-d4-v4");
    six->add_option("--json", json_path, "sequence description file");

    auto* descent = app.add_subcommand(
        "descent-report", "finite-field descent experiment");
    int n_arg = 2;
    unsigned q_arg = 2, k_arg = 2;
    descent->add_option("--n", n_arg, "configuration size")->required();
    descent->add_option("--q", q_arg, "base field size (prime)")->required();
    descent->add_option("--k", k_arg, "extension degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (format == "csv" && !*enumerate) {
        std::cerr << "usage: --format csv is only available for the flat "
                     "enumerate table\n";
        return 2;
    }

    OutputSink sink{output, format};
    try {
        if (*omega) {
            auto config = PointConfig::parse(points);
            auto s = SPrimeSet::parse(s_csv);
            json j = omega_test_json(config, s);
            sink.emit(j, std::string("member: ") +
                             (j["member"].get<bool>() ? "true" : "false"));
        } else if (*enumerate) {
            auto s = SPrimeSet::parse(s_csv);
            auto forms = enumerate_omega_forms(degree, s, height);
            if (format == "csv") {
                emit_enumerate_csv(sink, forms);
            } else if (with_orbits) {
                auto parts = orbit_partition(forms, s, bound);
                sink.emit(enumerate_json(forms, &parts));
            } else {
                sink.emit(enumerate_json(forms, nullptr));
            }
        } else if (*orbits_cmd) {
            auto s = SPrimeSet::parse(s_csv);
            std::vector<BinaryForm> forms;
            for (const auto& j : json::parse(forms_arg))
                forms.push_back(form_from_json(j));
            auto parts = orbit_partition(forms, s, bound);
            sink.emit(orbits_json(forms, parts));
        } else if (*reduce) {
            BinaryForm f = BinaryForm::parse(form_arg);
            sink.emit(to_json(reduce_form_mod_p(f, Int(p_arg))));
        } else if (*h1cmd) {
            sink.emit(run_h1(group_arg, module_arg));
        } else if (*six) {
            if (builtin.empty() == json_path.empty())
                throw std::domain_error(
                    "six-term: give exactly one of --builtin/--json");
            json desc;
            if (!json_path.empty()) {
                std::ifstream in(json_path);
                if (!in)
                    throw std::domain_error("cannot read " + json_path);
                in >> desc;
            }
            ShortExactSeq seq = builtin.empty() ? sequence_from_json(desc)
                                                : builtin_sequence(builtin);
            auto rep = six_term_check(seq);
            sink.emit(to_json(rep), rep.str());
        } else if (*descent) {
            if (!is_prime(Int(static_cast<long>(q_arg))))
                throw std::domain_error(
                    "descent-report: q must be prime in this model");
            FqField f(q_arg, k_arg);
            auto rep = orbit_fiber_report(f, n_arg);
            sink.emit(to_json(f, rep), rep.str());
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
