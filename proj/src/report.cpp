#include "strata/report.hpp"

#include <sstream>

#include "strata/siegel_veech.hpp"

namespace strata {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::non_vanishing: return "non_vanishing";
        case CheckStatus::vanishes_over_q: return "vanishes_over_Q";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string series_name(SeriesKind k) {
    return k == SeriesKind::product ? "product" : "corrected";
}

json record_to_json(const VerificationRecord& rec, bool include_timing) {
    json j;
    j["mu"] = rec.signature.canonical_text();
    j["ell"] = rec.signature.ell();
    j["g"] = rec.signature.genus();
    j["n"] = rec.signature.count();
    j["a"] = rec.target_degree;
    j["g_mod_3"] = rec.genus_mod_3;
    j["series"] = series_name(rec.series);
    j["status"] = status_name(rec.status);
    j["primes_tried"] = rec.primes_tried;
    if (rec.witness_prime) j["witness_prime"] = *rec.witness_prime;
    if (rec.rational_coefficient) j["coefficient"] = rec.rational_coefficient->get_str();
    if (include_timing) j["elapsed_us"] = rec.elapsed.count();
    return j;
}

std::string record_to_text(const VerificationRecord& rec) {
    std::ostringstream out;
    out << "signature     : " << rec.signature.canonical_text() << "  (ell="
        << rec.signature.ell() << ", g=" << rec.signature.genus() << ", n="
        << rec.signature.count() << ")\n";
    out << "target degree : " << rec.target_degree << "  (g mod 3 = " << rec.genus_mod_3
        << ", " << series_name(rec.series) << " series)\n";
    out << "status        : " << status_name(rec.status) << "\n";
    if (rec.rational_coefficient)
        out << "coefficient   : " << rec.rational_coefficient->get_str() << "\n";
    if (!rec.primes_tried.empty()) {
        out << "primes tried  :";
        for (auto p : rec.primes_tried) out << " " << p;
        out << "\n";
    }
    if (rec.witness_prime) out << "witness prime : " << *rec.witness_prime << "\n";
    out << "elapsed       : " << rec.elapsed.count() << " us\n";
    return out.str();
}

namespace {

json bound_json(const mpq_class& value) {
    json j;
    j["exact"] = value.get_str();
    j["floor"] = floor_rational(value);
    if (value < 0) j["vacuous"] = true;
    return j;
}

std::string bound_text(const mpq_class& value) {
    std::string s = value.get_str();
    if (value.get_den() != 1) s += " (floor " + std::to_string(floor_rational(value)) + ")";
    if (value < 0) s += " [vacuous]";
    return s;
}

}  // namespace

json range_report_to_json(const RangeReport& rep) {
    json j;
    j["mu"] = rep.signature.canonical_text();
    j["ell"] = rep.signature.ell();
    j["g"] = rep.signature.genus();
    j["n"] = rep.signature.count();
    j["k"] = rep.split.k;
    j["m"] = rep.split.m;
    j["r"] = rep.split.r;
    j["simple_zeros"] = rep.split.simple_zeros;
    j["extra_specified_ones"] = rep.extra_specified_ones;
    j["delta_0r"] = rep.d0r;
    j["delta_1l"] = rep.d1l;
    j["dim_if_holomorphic_abelian_type"] = rep.dim_abelian_type;
    j["dim_otherwise"] = rep.dim_other;
    j["injectivity_range"] = bound_json(rep.injectivity_range);
    j["surjectivity_range"] = bound_json(rep.surjectivity_range);
    j["free_generation_bound"] = bound_json(rep.free_generation);
    j["pure_weight_injectivity"] = bound_json(rep.pure_weight_injectivity);
    j["pure_weight_surjectivity"] = bound_json(rep.pure_weight_surjectivity);
    if (rep.stable_bound) {
        json s = bound_json(*rep.stable_bound);
        if (*rep.stable_bound < 0) s["note"] = "no stable range";
        j["stable_cohomology_bound"] = s;
    } else {
        j["stable_cohomology_bound"] = "n/a (not of holomorphic type)";
    }
    if (rep.codim.abelian) {
        j["codim_jump_locus_bound"] = bound_json(*rep.codim.abelian);
    } else if (rep.codim.higher) {
        j["codim_jump_locus_bound"] = json{{"strong", bound_json(rep.codim.higher->first)},
                                           {"weak", bound_json(rep.codim.higher->second)}};
    } else {
        j["codim_jump_locus_bound"] = "n/a (hypothesis on m fails)";
    }
    j["bundle_rank"] = rep.rank;
    json d = json::array();
    for (std::size_t i = 0; i < rep.monomial_counts.size(); ++i)
        d.push_back(rep.monomial_counts[i].get_str());
    j["decorated_monomial_counts"] = d;
    if (rep.generators.eta_generates) {
        j["generators"] = "eta";
    } else {
        j["generators"] = json{{"psi_at", rep.generators.psi_indices}};
    }
    if (rep.full_presentation) j["presentation"] = *rep.full_presentation;
    return j;
}

std::string range_report_to_text(const RangeReport& rep) {
    std::ostringstream out;
    out << "signature " << rep.signature.canonical_text() << "  ell=" << rep.signature.ell()
        << "  g=" << rep.signature.genus() << "  n=" << rep.signature.count() << "\n";
    out << "  specified parts k=" << rep.split.k << "  m=" << rep.split.m << "  r=" << rep.split.r
        << "  simple zeros=" << rep.split.simple_zeros << "\n";
    out << "  component dimension            : " << rep.dim_abelian_type
        << " (holomorphic abelian type) / " << rep.dim_other << " (otherwise)\n";
    out << "  injectivity range (H^*)        : " << bound_text(rep.injectivity_range) << "\n";
    out << "  surjectivity range (H^*)       : " << bound_text(rep.surjectivity_range) << "\n";
    out << "  free generation bound (Chow)   : " << bound_text(rep.free_generation) << "\n";
    out << "  pure weight injectivity (H^*)  : " << bound_text(rep.pure_weight_injectivity) << "\n";
    out << "  pure weight surjectivity (H^*) : " << bound_text(rep.pure_weight_surjectivity) << "\n";
    out << "  stable cohomology bound        : "
        << (rep.stable_bound ? bound_text(*rep.stable_bound) : "n/a (not of holomorphic type)")
        << "\n";
    out << "  codim of jump locus            : ";
    if (rep.codim.abelian) {
        out << bound_text(*rep.codim.abelian);
    } else if (rep.codim.higher) {
        out << bound_text(rep.codim.higher->first) << " (and >= "
            << bound_text(rep.codim.higher->second) << ")";
    } else {
        out << "n/a (hypothesis on m fails)";
    }
    out << "\n";
    out << "  bundle rank                    : " << rep.rank << "\n";
    out << "  d(2i), i=0..8, k=" << rep.split.k << "            :";
    for (const auto& v : rep.monomial_counts) out << " " << v.get_str();
    out << "\n";
    if (rep.generators.eta_generates) {
        out << "  generators                     : eta\n";
    } else {
        out << "  generators                     : psi at positions";
        for (int i : rep.generators.psi_indices) out << " " << i;
        out << " (eta = 0)\n";
    }
    if (rep.full_presentation)
        out << "  presentation                   : " << *rep.full_presentation << "\n";
    return out.str();
}

json varying_report_to_json(const VaryingReport& rep) {
    json j;
    j["odd_pairs"] = rep.odd_pair_count;
    j["g"] = rep.genus;
    j["mu"] = rep.mu_text;
    j["pi2_c_area_lower_bound"] = rep.hyperelliptic_lower_bound.get_str();
    j["pi2_generic_limit"] = "pi^2/2";
    j["pi2_enclosure"] = json{{"lower", pi_squared_lower().get_str()},
                              {"upper", pi_squared_upper().get_str()}};
    j["certified_varying"] = rep.certified_varying;
    j["verdict"] = rep.verdict;
    return j;
}

std::string varying_report_to_text(const VaryingReport& rep) {
    std::ostringstream out;
    out << "odd pairs m            : " << rep.odd_pair_count << "\n";
    out << "genus                  : " << rep.genus << "\n";
    out << "lifted signature       : " << rep.mu_text << "\n";
    out << "pi^2 c_area bound      : >= " << rep.hyperelliptic_lower_bound.get_str()
        << " on the hyperelliptic locus\n";
    out << "generic limit          : pi^2/2 (pi^2 in ["
        << pi_squared_lower().get_str() << ", " << pi_squared_upper().get_str() << "])\n";
    out << "verdict                : " << rep.verdict << "\n";
    return out.str();
}

json lift_to_json(const QuadraticSignature& nu) {
    json j;
    j["nu"] = nu.text();
    j["even_half_orders"] = nu.k_list();
    j["odd_half_orders"] = nu.l_list();
    StratumSignature mu = hyperelliptic_lift(nu);
    j["mu"] = mu.canonical_text();
    j["g"] = mu.genus();
    j["pi2_c_area"] = c_area_pi2(nu).get_str();
    return j;
}

std::string lift_to_text(const QuadraticSignature& nu) {
    StratumSignature mu = hyperelliptic_lift(nu);
    std::ostringstream out;
    out << "nu (quadratic, genus 0) : " << nu.text() << "\n";
    out << "hyperelliptic lift mu   : " << mu.canonical_text() << "  (g=" << mu.genus() << ")\n";
    out << "pi^2 * c_area           : " << c_area_pi2(nu).get_str() << "\n";
    return out.str();
}

}  // namespace strata
