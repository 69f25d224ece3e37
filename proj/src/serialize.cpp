#include "vanishforge/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace vanishforge {

namespace {

std::string real_to_string(const Real& r) { return r.str(0, std::ios_base::scientific); }

Real real_from_string(const std::string& s) { return Real(s); }

}  // namespace

Json complex_to_json(const Complex& z) {
    return Json::array({real_to_string(z.re), real_to_string(z.im)});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
    return Complex(real_from_string(j[0].get<std::string>()),
                   real_from_string(j[1].get<std::string>()));
}

Json character_to_json(const DirichletCharacter& chi) {
    return Json{{"modulus", chi.modulus}, {"index", chi.index}};
}

DirichletCharacter character_from_json(const Json& j) {
    DirichletCharacter chi;
    chi.modulus = j.at("modulus").get<long>();
    chi.index = j.at("index").get<long>();
    if (!is_odd_prime(chi.modulus)) throw std::invalid_argument("character modulus must be an odd prime");
    if (chi.index < 0 || chi.index > chi.modulus - 2)
        throw std::invalid_argument("character index out of range");
    return chi;
}

Json weak_to_json(const WeakFunction& w) {
    Json beta = Json::array();
    for (const auto& b : w.beta) beta.push_back(complex_to_json(b));
    return Json{{"schema", 1}, {"type", "weak-function"}, {"level", w.level}, {"beta", beta}};
}

WeakFunction weak_from_json(const Json& j) {
    long level = j.at("level").get<long>();
    std::vector<Complex> beta;
    for (const auto& b : j.at("beta")) beta.push_back(complex_from_json(b));
    return make_weak(level, std::move(beta));
}

Json qexpansion_to_json(const QExpansion& e) {
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(complex_to_json(c));
    return Json{{"schema", 1},
                {"type", "q-expansion"},
                {"k", e.weight},
                {"scale", e.scale},
                {"coeffs", coeffs}};
}

QExpansion qexpansion_from_json(const Json& j) {
    QExpansion e;
    e.weight = j.at("k").get<long>();
    e.scale = j.at("scale").get<long>();
    for (const auto& c : j.at("coeffs")) e.coeffs.push_back(complex_from_json(c));
    return e;
}

Json tensor_to_json(const TensorElement& t) {
    Json entries = Json::array();
    for (long c = 0; c <= t.p1 - 3; ++c)
        for (long d = 0; d <= t.p2 - 3; ++d) {
            if (t.coeffs[c][d].is_zero()) continue;
            entries.push_back(Json{{"c", c},
                                   {"d", d},
                                   {"re", real_to_string(t.coeffs[c][d].re)},
                                   {"im", real_to_string(t.coeffs[c][d].im)}});
        }
    return Json{{"schema", 1}, {"type", "tensor"}, {"p1", t.p1}, {"p2", t.p2}, {"entries", entries}};
}

TensorElement tensor_from_json(const Json& j) {
    long p1 = j.at("p1").get<long>();
    long p2 = j.at("p2").get<long>();
    CMatrix coeffs(p1 - 2, std::vector<Complex>(p2 - 2));
    for (const auto& e : j.at("entries")) {
        long c = e.at("c").get<long>();
        long d = e.at("d").get<long>();
        coeffs.at(c).at(d) = Complex(real_from_string(e.at("re").get<std::string>()),
                                     real_from_string(e.at("im").get<std::string>()));
    }
    return make_tensor(p1, p2, std::move(coeffs));
}

Json combination_to_json(const EisensteinCombination& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms)
        terms.push_back(Json{{"chi", character_to_json(t.chi)},
                             {"psi", character_to_json(t.psi)},
                             {"coeff", complex_to_json(t.coeff)}});
    return Json{{"k", f.weight}, {"p1", f.p1}, {"p2", f.p2}, {"terms", terms}};
}

EisensteinCombination combination_from_json(const Json& j) {
    EisensteinCombination f;
    f.weight = j.at("k").get<long>();
    f.p1 = j.at("p1").get<long>();
    f.p2 = j.at("p2").get<long>();
    for (const auto& t : j.at("terms")) {
        EisTerm term;
        term.chi = character_from_json(t.at("chi"));
        term.psi = character_from_json(t.at("psi"));
        term.coeff = complex_from_json(t.at("coeff"));
        f.terms.push_back(std::move(term));
    }
    return f;
}

namespace {

Json report_to_json(const ElementReport& rep) {
    Json points = Json::array();
    for (const auto& p : rep.points)
        points.push_back(Json{{"s", p.s},
                              {"value", complex_to_json(p.value)},
                              {"scale", real_to_string(p.scale)},
                              {"claimed_zero", p.claimed_zero},
                              {"vanished", p.vanished},
                              {"trivial", p.trivial},
                              {"pass", p.pass}});
    return Json{{"element", rep.name}, {"points", points}};
}

ElementReport report_from_json(const Json& j) {
    ElementReport rep;
    rep.name = j.at("element").get<std::string>();
    for (const auto& p : j.at("points")) {
        LPointReport pr;
        pr.s = p.at("s").get<long>();
        pr.value = complex_from_json(p.at("value"));
        pr.scale = real_from_string(p.at("scale").get<std::string>());
        pr.claimed_zero = p.at("claimed_zero").get<bool>();
        pr.vanished = p.at("vanished").get<bool>();
        pr.trivial = p.at("trivial").get<bool>();
        pr.pass = p.at("pass").get<bool>();
        rep.points.push_back(std::move(pr));
    }
    return rep;
}

}  // namespace

Json certificate_to_json(const ConstructionCertificate& cert) {
    Json inputs{{"p1", cert.p1}, {"p2", cert.p2}, {"k", cert.k}};
    if (cert.mode == "small-weight") {
        inputs["vanish_set"] = Json::array();
        for (long l : cert.vanish_set) inputs["vanish_set"].push_back(l);
    } else {
        inputs["l1"] = cert.l1;
        inputs["l2"] = cert.l2;
    }
    Json basis = Json::array();
    for (size_t i = 0; i < cert.basis.size(); ++i) {
        Json b = combination_to_json(cert.basis[i]);
        b["indices"] = Json::array({cert.basis_indices[i].first, cert.basis_indices[i].second});
        if (i < cert.q_digests.size()) {
            Json digest = Json::array();
            for (const auto& c : cert.q_digests[i]) digest.push_back(complex_to_json(c));
            b["q_digest"] = digest;
        }
        basis.push_back(std::move(b));
    }
    Json witnesses = Json::array();
    for (size_t i = 0; i < cert.witnesses.size(); ++i) {
        Json w = combination_to_json(cert.witnesses[i]);
        w["target"] = cert.witness_targets[i];
        witnesses.push_back(std::move(w));
    }
    Json reports = Json::array();
    for (const auto& r : cert.reports) reports.push_back(report_to_json(r));
    Json witness_reports = Json::array();
    for (const auto& r : cert.witness_reports) witness_reports.push_back(report_to_json(r));
    Json wm = Json::array();
    for (const auto& row : cert.witness_matrix) {
        Json jrow = Json::array();
        for (const auto& v : row) jrow.push_back(complex_to_json(v));
        wm.push_back(std::move(jrow));
    }
    Json claims = Json::array();
    for (const auto& [text, ok] : cert.claims) claims.push_back(Json{{"text", text}, {"pass", ok}});
    Json claimed_points = Json::array();
    for (long s : cert.claimed_points) claimed_points.push_back(s);

    return Json{{"schema", 1},
                {"type", "construction-certificate"},
                {"mode", cert.mode},
                {"inputs", inputs},
                {"precision",
                 Json{{"bits", cert.precision_bits},
                      {"vanish_threshold", real_to_string(cert.vanish_threshold)},
                      {"rank_threshold", real_to_string(cert.rank_threshold)}}},
                {"space",
                 Json{{"dimension", cert.space_dimension},
                      {"kernel_dimension", cert.kernel_dimension},
                      {"exact_kernel", cert.exact_kernel},
                      {"warning", cert.warning}}},
                {"claimed_points", claimed_points},
                {"basis", basis},
                {"witnesses", witnesses},
                {"l_reports", reports},
                {"witness_reports", witness_reports},
                {"witness_matrix", wm},
                {"witness_condition", real_to_string(cert.witness_condition)},
                {"claims", claims},
                {"all_pass", cert.all_pass}};
}

ConstructionCertificate certificate_from_json(const Json& j) {
    if (j.at("type").get<std::string>() != "construction-certificate")
        throw std::invalid_argument("not a construction certificate");
    ConstructionCertificate cert;
    cert.mode = j.at("mode").get<std::string>();
    const Json& inputs = j.at("inputs");
    cert.p1 = inputs.at("p1").get<long>();
    cert.p2 = inputs.at("p2").get<long>();
    cert.k = inputs.at("k").get<long>();
    if (inputs.contains("vanish_set"))
        for (const auto& l : inputs.at("vanish_set")) cert.vanish_set.insert(l.get<long>());
    if (inputs.contains("l1")) cert.l1 = inputs.at("l1").get<long>();
    if (inputs.contains("l2")) cert.l2 = inputs.at("l2").get<long>();
    cert.precision_bits = j.at("precision").at("bits").get<unsigned>();
    cert.vanish_threshold = real_from_string(j.at("precision").at("vanish_threshold").get<std::string>());
    cert.rank_threshold = real_from_string(j.at("precision").at("rank_threshold").get<std::string>());
    cert.space_dimension = j.at("space").at("dimension").get<long>();
    cert.kernel_dimension = j.at("space").at("kernel_dimension").get<long>();
    cert.exact_kernel = j.at("space").at("exact_kernel").get<bool>();
    cert.warning = j.at("space").at("warning").get<std::string>();
    for (const auto& s : j.at("claimed_points")) cert.claimed_points.push_back(s.get<long>());
    for (const auto& b : j.at("basis")) {
        cert.basis.push_back(combination_from_json(b));
        cert.basis_indices.emplace_back(b.at("indices")[0].get<long>(),
                                        b.at("indices")[1].get<long>());
        if (b.contains("q_digest")) {
            std::vector<Complex> digest;
            for (const auto& c : b.at("q_digest")) digest.push_back(complex_from_json(c));
            cert.q_digests.push_back(std::move(digest));
        }
    }
    for (const auto& w : j.at("witnesses")) {
        cert.witnesses.push_back(combination_from_json(w));
        cert.witness_targets.push_back(w.at("target").get<long>());
    }
    for (const auto& r : j.at("l_reports")) cert.reports.push_back(report_from_json(r));
    for (const auto& r : j.at("witness_reports")) cert.witness_reports.push_back(report_from_json(r));
    for (const auto& row : j.at("witness_matrix")) {
        std::vector<Complex> mrow;
        for (const auto& v : row) mrow.push_back(complex_from_json(v));
        cert.witness_matrix.push_back(std::move(mrow));
    }
    cert.witness_condition = real_from_string(j.at("witness_condition").get<std::string>());
    for (const auto& c : j.at("claims"))
        cert.claims.emplace_back(c.at("text").get<std::string>(), c.at("pass").get<bool>());
    cert.all_pass = j.at("all_pass").get<bool>();
    return cert;
}

Json alpha_basis_to_json(long level, const std::vector<WeakFunction>& alphas,
                         const std::vector<std::vector<Complex>>& taylor_digests) {
    Json functions = Json::array();
    for (size_t i = 0; i < alphas.size(); ++i) {
        Json f = weak_to_json(alphas[i]);
        f["order"] = static_cast<long>(i);
        if (i < taylor_digests.size()) {
            Json digest = Json::array();
            for (const auto& c : taylor_digests[i]) digest.push_back(complex_to_json(c));
            f["taylor_digest"] = digest;
        }
        functions.push_back(std::move(f));
    }
    return Json{{"schema", 1}, {"type", "alpha-basis"}, {"level", level}, {"functions", functions}};
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace vanishforge
