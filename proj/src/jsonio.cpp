#include "goodred/jsonio.hpp"

namespace goodred {

json int_to_json(const Int& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (const Int& c : f.coeffs())
        coeffs.push_back(int_to_json(c));
    return coeffs;
}

json to_json(const PointConfig& c) {
    json pts = json::array();
    for (const ProjPoint& p : c)
        pts.push_back(p.str());
    return pts;
}

json to_json(const FactorPatternModP& pattern) {
    json factors = json::array();
    for (const auto& g : pattern.factors) {
        json coeffs = json::array();
        for (const Int& c : g.coeffs)
            coeffs.push_back(int_to_json(c));
        factors.push_back(
            {{"coeffs", coeffs}, {"mult", g.multiplicity}});
    }
    return {{"p", int_to_json(pattern.p)}, {"factors", factors}};
}

json to_json(const SixTermReport& rep) {
    return {{"h0", {rep.h0a, rep.h0b, rep.h0c}},
            {"h1", {rep.h1a, rep.h1b, rep.h1c}},
            {"delta_image", rep.delta_image},
            {"u1_image", rep.u1_image},
            {"v1_kernel", rep.v1_kernel},
            {"cg_orbits", rep.cg_orbits},
            {"h0_row_exact", rep.h0_row_exact},
            {"delta_exact_at_h0c", rep.delta_exact_at_h0c},
            {"exact_at_h1a", rep.exact_at_h1a},
            {"fibers_are_cg_orbits", rep.fibers_are_cg_orbits},
            {"kernel_v1_is_u1_image", rep.kernel_v1_is_u1_image},
            {"passed", rep.passed()}};
}

json to_json(const TwistedFiberReport& rep) {
    return {{"fiber_size", rep.fiber_size},
            {"twisted_h1a", rep.twisted_h1a},
            {"shifted_image", rep.shifted_image},
            {"distinguished_maps_to_f", rep.distinguished_maps_to_f},
            {"image_equals_fiber", rep.image_equals_fiber},
            {"passed", rep.passed()}};
}

json omega_test_json(const PointConfig& c, const SPrimeSet& s) {
    json bad = json::array();
    for (const Int& p : colliding_primes(c))
        bad.push_back(int_to_json(p));
    json sj = json::array();
    for (const Int& p : s.primes())
        sj.push_back(int_to_json(p));
    return {{"points", to_json(c)},
            {"s", sj},
            {"member", omega_member(c, s)},
            {"colliding_primes", bad}};
}

json enumerate_json(const std::vector<BinaryForm>& forms,
                    const std::vector<std::vector<std::size_t>>* orbits) {
    json out;
    json list = json::array();
    for (const auto& f : forms)
        list.push_back(to_json(f));
    out["count"] = forms.size();
    out["forms"] = list;
    if (orbits) {
        out["orbit_count"] = orbits->size();
        out["orbits"] = *orbits;
    }
    return out;
}

json orbits_json(const std::vector<BinaryForm>& forms,
                 const std::vector<std::vector<std::size_t>>& orbits) {
    json out = enumerate_json(forms, &orbits);
    return out;
}

json h1_zr_json(const H1ZrResult& res) {
    json divs = json::array();
    for (const Int& d : res.divisors)
        divs.push_back(int_to_json(d));
    return {{"elementary_divisors", divs},
            {"order", int_to_json(res.order())}};
}

json to_json(const FqField& f, const OrbitFiberReport& rep) {
    json orbits = json::array();
    for (const auto& o : rep.orbits) {
        json members = json::array();
        for (const auto& m : o.members)
            members.push_back({{"config", config_str(f, m.config)},
                               {"base_orbit", m.base_orbit},
                               {"psi_class", m.psi_class},
                               {"witness", pgl2_str(f, m.witness)}});
        orbits.push_back({{"representative", config_str(f, o.representative)},
                          {"stable_in_orbit", o.stable_in_orbit},
                          {"stabilizer_order", o.stabilizer_order},
                          {"h1_size", o.h1_size},
                          {"fiber_size", o.base_orbits},
                          {"distinct_psi_classes", o.distinct_psi_classes},
                          {"psi_well_defined", o.psi_well_defined},
                          {"base_invariance", o.base_invariance},
                          {"injective", o.injective},
                          {"members", members}});
    }
    return {{"n", rep.n},
            {"q", rep.p},
            {"k", rep.k},
            {"modulus", f.modulus()},
            {"stable_count", rep.stable_count},
            {"base_orbit_count", rep.base_orbit_count},
            {"orbits", orbits},
            {"partition_consistent", rep.partition_consistent},
            {"all_ok", rep.all_ok()}};
}

BinaryForm form_from_json(const json& j) {
    std::vector<Int> cs;
    for (const auto& c : j) {
        if (c.is_number_integer())
            cs.emplace_back(static_cast<long>(c.get<long long>()));
        else
            cs.emplace_back(c.get<std::string>());
    }
    const int deg = static_cast<int>(cs.size()) - 1;
    return BinaryForm(deg, std::move(cs));
}

} // namespace goodred
