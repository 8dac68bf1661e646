#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "h1cube/catalog.hpp"
#include "h1cube/class_function.hpp"
#include "h1cube/errors.hpp"
#include "h1cube/hurwitz.hpp"
#include "h1cube/pgl2.hpp"
#include "h1cube/psl2_scan.hpp"
#include "h1cube/spec_file.hpp"

namespace py = pybind11;
using namespace h1cube;

namespace {

std::vector<VanishingCertificate> certify_impl(const std::string& builtin,
                                               const std::string& spec_text,
                                               const std::vector<unsigned>& signature,
                                               const std::vector<std::string>& classes) {
    GroupSpec spec;
    if (!builtin.empty())
        spec = catalog_entry(builtin).group;
    else if (!spec_text.empty())
        spec = parse_group_spec(spec_text);
    else
        throw InvalidInput("certify: pass builtin= or spec=");
    GroupPtr G = build_group(spec);
    if (!classes.empty())
        return {vanishing_certificate(G, RamificationType::from_labels(G, classes))};
    if (!signature.empty()) return certify_signature(G, signature);
    if (!builtin.empty()) return certify_entry(catalog_entry(builtin));
    throw InvalidInput("certify: pass signature= or classes=");
}

std::string certify_json(const std::string& builtin, const std::string& spec_text,
                         const std::vector<unsigned>& signature,
                         const std::vector<std::string>& classes) {
    std::string out = "[";
    bool first = true;
    for (const auto& cert : certify_impl(builtin, spec_text, signature, classes)) {
        if (!first) out += ",";
        out += certificate_to_json_string(cert);
        first = false;
    }
    return out + "]";
}

std::string trilinear_json(unsigned q) {
    TrilinearReport rep = verify_trilinear(q);
    std::string out = "{\"q\":" + std::to_string(rep.q) +
                      ",\"triples_checked\":" + std::to_string(rep.triples_checked) +
                      ",\"violations\":[";
    bool first = true;
    for (const auto& v : rep.violations) {
        if (!first) out += ",";
        out += "\"" + v.triple + "\"";
        first = false;
    }
    return out + "]}";
}

std::string table_json(const std::string& builtin, const std::string& spec_text) {
    GroupSpec spec = builtin.empty() ? parse_group_spec(spec_text) : catalog_entry(builtin).group;
    GroupPtr G = build_group(spec);
    return table_to_json_string(character_table_for(G, spec.str()));
}

}  // namespace

PYBIND11_MODULE(_h1cube, m) {
    m.doc() = "exact character-theoretic certification of (H^1)^{x3}-invariant vanishing";

    py::register_exception<Error>(m, "H1CubeError");

    m.def("certify_json", &certify_json, py::arg("builtin") = "", py::arg("spec") = "",
          py::arg("signature") = std::vector<unsigned>{},
          py::arg("classes") = std::vector<std::string>{},
          "Certificates (JSON array string) for a builtin entry or a group spec");
    m.def("reproduce_json", [] { return reproduce_report_to_json_string(reproduce_all()); },
          "Certify the whole catalog; JSON report string");
    m.def("trilinear_json", &trilinear_json, py::arg("q"),
          "Exhaustive trilinear verification report for PGL(2,q)");
    m.def("scan_psl2_json", [](unsigned qmax) { return scan_rows_to_json_string(scan_theorem(qmax)); },
          py::arg("qmax") = 199, "PSL(2,q) Hurwitz scan rows (JSON string)");
    m.def("character_table_json", &table_json, py::arg("builtin") = "", py::arg("spec") = "",
          "Character table (Dixon) of a builtin or group-spec group");
    m.def("macbeath_admissible", [](unsigned long long q) { return macbeath_admissible(q); },
          py::arg("q"));
    m.def("genus_from_signature",
          [](long long order, const std::vector<unsigned>& sig) {
              return genus_from_signature(order, sig);
          },
          py::arg("group_order"), py::arg("signature"));
    m.def("verify_identity_polynomial", &verify_identity_polynomial,
          "Symbolic check of the 4-variable rational identity");
    m.def("builtin_names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog_entries()) names.push_back(e.name);
        return names;
    });
}
