#include "qclone/serialization.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qclone/errors.hpp"

namespace qclone::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) throw FormatError(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

bool boolean(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean()) throw FormatError(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::vector<double> numbers(const json& j) {
    if (!j.is_array()) throw FormatError("expected an array of numbers");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) throw FormatError("expected an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

json alpha_json(const Alpha& a) { return {{"alpha0", a.a0}, {"alpha1", a.a1}, {"alpha2", a.a2}}; }

Alpha alpha_from(const json& j) { return Alpha{number(j, "alpha0"), number(j, "alpha1"), number(j, "alpha2")}; }

json kets_json(const auto& kets) {
    json arr = json::array();
    for (const Ket& k : kets) arr.push_back(to_json(k));
    return arr;
}

template <std::size_t N>
std::array<Ket, N> kets_from(const json& j) {
    if (!j.is_array() || j.size() != N) throw FormatError("unexpected number of kets");
    std::array<Ket, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = ket_from_json(j[i]);
    return out;
}

}  // namespace

json to_json(const Ket& ket) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < ket.dim(); ++i) {
        re.push_back(ket[i].real());
        im.push_back(ket[i].imag());
    }
    return {{"re", re}, {"im", im}};
}

Ket ket_from_json(const json& j) {
    const auto re = numbers(field(j, "re"));
    const auto im = numbers(field(j, "im"));
    if (re.size() != im.size() || re.empty()) throw FormatError("ket re/im arrays must be nonempty and equally long");
    Vector v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = cplx{re[i], im[i]};
    return Ket(std::move(v));
}

json to_json(const Operator& op) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
        json rr = json::array();
        json ri = json::array();
        for (Eigen::Index c = 0; c < op.cols(); ++c) {
            rr.push_back(op(r, c).real());
            ri.push_back(op(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"re", re}, {"im", im}};
}

Operator operator_from_json(const json& j) {
    const json& re = field(j, "re");
    const json& im = field(j, "im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
        throw FormatError("operator re/im must be equally sized nonempty arrays");
    const auto rows = static_cast<Eigen::Index>(re.size());
    const auto cols = static_cast<Eigen::Index>(numbers(re[0]).size());
    Operator op(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto rr = numbers(re[static_cast<std::size_t>(r)]);
        const auto ri = numbers(im[static_cast<std::size_t>(r)]);
        if (static_cast<Eigen::Index>(rr.size()) != cols || ri.size() != rr.size())
            throw FormatError("ragged operator rows");
        for (Eigen::Index c = 0; c < cols; ++c)
            op(r, c) = cplx{rr[static_cast<std::size_t>(c)], ri[static_cast<std::size_t>(c)]};
    }
    return op;
}

StateSet state_set_from_json(const json& j, std::vector<std::string>* warnings, const Tolerances& tol) {
    const json& dim_field = field(j, "dim");
    if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0)
        throw FormatError("'dim' must be a positive integer");
    const auto dim = dim_field.get<std::size_t>();
    const json& states = field(j, "states");
    if (!states.is_array()) throw FormatError("'states' must be an array");

    std::vector<LabeledKet> kets;
    for (const auto& s : states) {
        const json& label = field(s, "label");
        if (!label.is_string()) throw FormatError("state label must be a string");
        Ket k = ket_from_json(s);
        if (k.dim() != dim) {
            std::ostringstream msg;
            msg << "state '" << label.get<std::string>() << "' has " << k.dim() << " amplitudes, expected " << dim;
            throw FormatError(msg.str());
        }
        const double dev = std::abs(k.norm() - 1.0);
        if (dev > kRenormalizeLimit) {
            std::ostringstream msg;
            msg << "state '" << label.get<std::string>() << "' has norm " << k.norm();
            throw FormatError(msg.str());
        }
        if (dev > tol.norm) {
            if (warnings) warnings->push_back("renormalized state '" + label.get<std::string>() + "'");
            k = k.normalized();
        }
        kets.push_back(LabeledKet{label.get<std::string>(), std::move(k)});
    }
    try {
        return StateSet(dim, std::move(kets), tol);
    } catch (const DimensionError& e) {
        throw FormatError(e.what());
    }
}

json to_json(const StateSet& set) {
    json states = json::array();
    for (const auto& s : set.states()) {
        json entry = to_json(s.ket);
        entry["label"] = s.label;
        states.push_back(std::move(entry));
    }
    return {{"dim", set.dim()}, {"states", states}};
}

json to_json(const CloningInstance& inst) {
    return {{"alpha", alpha_json(inst.alpha)}, {"psi", kets_json(inst.psi)}, {"phi", kets_json(inst.phi)},
            {"v", kets_json(inst.v)},         {"w", kets_json(inst.w)},     {"U", to_json(inst.unitary)}};
}

CloningInstance instance_from_json(const json& j, const Tolerances& tol) {
    CloningInstance inst;
    inst.alpha = alpha_from(field(j, "alpha"));
    inst.psi = kets_from<3>(field(j, "psi"));
    inst.phi = kets_from<3>(field(j, "phi"));
    inst.v = kets_from<3>(field(j, "v"));
    inst.w = kets_from<3>(field(j, "w"));
    inst.unitary = operator_from_json(field(j, "U"));
    constexpr auto total = static_cast<Eigen::Index>(kRegisterDim * kRegisterDim);
    if (inst.unitary.rows() != total || inst.unitary.cols() != total) throw FormatError("U must be 9x9");
    if (!is_unitary(inst.unitary, tol.norm)) throw FormatError("U is not unitary");
    for (std::size_t i = 0; i < 3; ++i)
        if (inst.psi[i].dim() != kRegisterDim || inst.phi[i].dim() != kRegisterDim)
            throw FormatError("psi/phi kets must be qutrits");
    if (cloning_error(inst) > 1e-9) throw FormatError("U does not clone the stored states");
    return inst;
}

json to_json(const LoccCertificate& c) {
    json phi_probe = {{"e3_in", c.e3_in},
                      {"e3_out", c.e3_out},
                      {"gamma_BBp_upper", c.gamma_bbp_upper},
                      {"gamma_BBp_zero", c.gamma_bbp_zero}};
    json psi_probe = {{"e2_in", c.e2_in},
                      {"e2_out_AB", c.e2_out_ab},
                      {"e2_out_AAp", c.e2_out_aap},
                      {"delta_AB", c.delta_ab},
                      {"delta_AAp", c.delta_aap},
                      {"gamma_AAp_plus_AB_upper", c.gamma_sum_upper},
                      {"gamma_AAp_plus_AB_below_one", c.gamma_sum_below_one}};
    json witnesses = {{"kappa", c.kappa},
                      {"kappa_residual", c.kappa_residual},
                      {"det", c.det_witness},
                      {"norm_rho_in", c.norm_rho_in},
                      {"norm_rho_out", c.norm_rho_out},
                      {"norm_rho_prime", c.norm_rho_prime},
                      {"perron_ok", c.perron_ok},
                      {"perron_min_entry", c.perron_min_entry},
                      {"perron_vector", c.perron_vector},
                      {"perron_lower_bound", c.perron_lower_bound}};
    return {{"alpha", alpha_json(c.alpha)},
            {"phi_probe", phi_probe},
            {"psi_probe", psi_probe},
            {"witnesses", witnesses},
            {"verdict", to_string(c.verdict)}};
}

LoccCertificate certificate_from_json(const json& j) {
    LoccCertificate c;
    c.alpha = alpha_from(field(j, "alpha"));
    const json& phi = field(j, "phi_probe");
    c.e3_in = number(phi, "e3_in");
    c.e3_out = number(phi, "e3_out");
    c.gamma_bbp_upper = number(phi, "gamma_BBp_upper");
    c.gamma_bbp_zero = boolean(phi, "gamma_BBp_zero");
    const json& psi = field(j, "psi_probe");
    c.e2_in = number(psi, "e2_in");
    c.e2_out_ab = number(psi, "e2_out_AB");
    c.e2_out_aap = number(psi, "e2_out_AAp");
    c.delta_ab = number(psi, "delta_AB");
    c.delta_aap = number(psi, "delta_AAp");
    c.gamma_sum_upper = number(psi, "gamma_AAp_plus_AB_upper");
    c.gamma_sum_below_one = boolean(psi, "gamma_AAp_plus_AB_below_one");
    const json& w = field(j, "witnesses");
    c.kappa = number(w, "kappa");
    c.kappa_residual = number(w, "kappa_residual");
    c.det_witness = number(w, "det");
    c.norm_rho_in = number(w, "norm_rho_in");
    c.norm_rho_out = number(w, "norm_rho_out");
    c.norm_rho_prime = number(w, "norm_rho_prime");
    c.perron_ok = boolean(w, "perron_ok");
    c.perron_min_entry = number(w, "perron_min_entry");
    c.perron_vector = numbers(field(w, "perron_vector"));
    c.perron_lower_bound = number(w, "perron_lower_bound");
    const json& verdict = field(j, "verdict");
    if (!verdict.is_string()) throw FormatError("'verdict' must be a string");
    try {
        c.verdict = verdict_from_string(verdict.get<std::string>());
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    }
    return c;
}

json to_json(const GramAnalysis& a, const StateSet& set) {
    json labels = json::array();
    for (const auto& s : set.states()) labels.push_back(s.label);
    const char* classification = a.is_pno ? "pno" : a.is_reducible ? "reducible" : "irreducible-non-pno";
    return {{"dim", set.dim()},
            {"n", set.size()},
            {"labels", labels},
            {"gram", to_json(a.gram)},
            {"is_pno", a.is_pno},
            {"is_reducible", a.is_reducible},
            {"components", a.components},
            {"classification", classification}};
}

json to_json(const VerificationReport& r, const StateSet& set) {
    const CanonicalFrame& f = r.supplementary.frame;
    json order_labels = json::array();
    for (std::size_t idx : f.order) order_labels.push_back(set.label(idx));
    json phases_re = json::array();
    json phases_im = json::array();
    for (const cplx& p : f.phases) {
        phases_re.push_back(p.real());
        phases_im.push_back(p.imag());
    }
    json supplementary = json::array();
    for (std::size_t k = 0; k < r.supplementary.phi.size(); ++k) {
        json entry = to_json(r.supplementary.phi[k]);
        entry["label"] = set.label(f.order[k]);
        supplementary.push_back(std::move(entry));
    }
    return {{"analysis", to_json(r.analysis, set)},
            {"chain",
             {{"indices", {r.chain.first, r.chain.middle, r.chain.last}},
              {"labels", {set.label(r.chain.first), set.label(r.chain.middle), set.label(r.chain.last)}}}},
            {"canonical",
             {{"alpha", alpha_json(Alpha{f.alpha0, f.alpha1, f.alpha2})},
              {"order", f.order},
              {"order_labels", order_labels},
              {"phases", {{"re", phases_re}, {"im", phases_im}}},
              {"basis_change", to_json(f.basis_change)}}},
            {"supplementary", {{"register_dim", r.supplementary.register_dim}, {"states", supplementary}}},
            {"certificate", to_json(r.certificate)}};
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += format_double(r.alpha0) + ',' + format_double(r.alpha1) + ',' + format_double(r.delta_ab) + ',' +
               format_double(r.delta_aap) + '\n';
    }
    return out;
}

std::vector<SweepRow> sweep_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kSweepHeader) throw FormatError("missing sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double v[4];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int k = 0; k < 4; ++k) {
            const auto res = std::from_chars(p, end, v[k]);
            if (res.ec != std::errc{} || !std::isfinite(v[k])) throw FormatError("bad number in sweep CSV: " + line);
            p = res.ptr;
            if (k < 3) {
                if (p == end || *p != ',') throw FormatError("expected ',' in sweep CSV: " + line);
                ++p;
            }
        }
        if (p != end) throw FormatError("trailing data in sweep CSV: " + line);
        rows.push_back(SweepRow{v[0], v[1], v[2], v[3]});
    }
    return rows;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qclone::io
