#include "sectorpack/json_report.hpp"

namespace sectorpack {

using nlohmann::json;

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

CheckStatus status_from(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    return CheckStatus::Skipped;
}

const char* kind_name(VerificationReport::FailureKind k) {
    switch (k) {
        case VerificationReport::FailureKind::Collision: return "collision";
        case VerificationReport::FailureKind::Gap: return "gap";
        case VerificationReport::FailureKind::OutOfRange: return "out_of_range";
        case VerificationReport::FailureKind::Unbounded: return "unbounded";
        default: return "none";
    }
}

VerificationReport::FailureKind kind_from(const std::string& s) {
    if (s == "collision") return VerificationReport::FailureKind::Collision;
    if (s == "gap") return VerificationReport::FailureKind::Gap;
    if (s == "out_of_range") return VerificationReport::FailureKind::OutOfRange;
    if (s == "unbounded") return VerificationReport::FailureKind::Unbounded;
    return VerificationReport::FailureKind::None;
}

} // namespace

json to_json(const LatticePoint& p) {
    return json{{"x", p.x.get_str()}, {"y", p.y.get_str()}};
}

LatticePoint lattice_point_from_json(const json& j) {
    return {Int(j.at("x").get<std::string>()), Int(j.at("y").get<std::string>())};
}

json to_json(const CollisionWitness& w) {
    return json{{"schema", kReportSchema},
                {"p", to_json(w.p)},
                {"q", to_json(w.q)},
                {"value", w.value.get_str()},
                {"r", w.r.get_str()},
                {"s", w.s.get_str()},
                {"i", w.line_index.get_str()},
                {"anchor", to_json(w.axis)}};
}

CollisionWitness collision_from_json(const json& j) {
    CollisionWitness w;
    w.p = lattice_point_from_json(j.at("p"));
    w.q = lattice_point_from_json(j.at("q"));
    w.value = Int(j.at("value").get<std::string>());
    w.r = Int(j.at("r").get<std::string>());
    w.s = Int(j.at("s").get<std::string>());
    w.line_index = Int(j.at("i").get<std::string>());
    w.axis = lattice_point_from_json(j.at("anchor"));
    return w;
}

json to_json(const ConditionChecklist& c) {
    json entries = json::array();
    for (const auto& e : c.entries)
        entries.push_back(
            json{{"name", e.name}, {"status", status_name(e.status)}, {"witness", e.witness}});
    return json{{"schema", kReportSchema}, {"all_pass", c.all_pass()}, {"entries", entries}};
}

ConditionChecklist checklist_from_json(const json& j) {
    ConditionChecklist c;
    for (const auto& e : j.at("entries"))
        c.entries.push_back({e.at("name").get<std::string>(),
                             status_from(e.at("status").get<std::string>()),
                             e.at("witness").get<std::string>()});
    return c;
}

json to_json(const VerificationReport& r) {
    json out{{"schema", kReportSchema},
             {"status", r.verified() ? "verified" : "failed"},
             {"limit", r.limit.get_str()},
             {"failure", kind_name(r.kind)}};
    if (r.kind == VerificationReport::FailureKind::Collision) {
        out["value"] = r.value.get_str();
        out["p"] = to_json(r.p);
        out["q"] = to_json(r.q);
    } else if (r.kind == VerificationReport::FailureKind::Gap) {
        out["value"] = r.value.get_str();
    } else if (r.kind == VerificationReport::FailureKind::OutOfRange) {
        out["value"] = r.value.get_str();
        out["p"] = to_json(r.p);
    }
    return out;
}

VerificationReport verification_from_json(const json& j) {
    VerificationReport r;
    r.status = j.at("status").get<std::string>() == "verified"
                   ? VerificationReport::Status::VerifiedUpTo
                   : VerificationReport::Status::Failed;
    r.limit = Int(j.at("limit").get<std::string>());
    r.kind = kind_from(j.at("failure").get<std::string>());
    if (j.contains("value")) r.value = Int(j.at("value").get<std::string>());
    if (j.contains("p")) r.p = lattice_point_from_json(j.at("p"));
    if (j.contains("q")) r.q = lattice_point_from_json(j.at("q"));
    return r;
}

json to_json(const DensityReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"n", row.level.get_str()},
                            {"count", row.count.get_str()},
                            {"count_over_n", row.count_over_n},
                            {"area", row.area},
                            {"davenport_gap", row.davenport_gap}});
    json out{{"schema", kReportSchema}, {"rows", rows}};
    if (r.has_closed_form) {
        if (r.closed_form.infinite) {
            out["closed_form"] = "inf";
        } else {
            const QuadVal& v = r.closed_form.value;
            out["closed_form"] = json{{"rat", v.rat().str()},
                                      {"coef", v.coef().str()},
                                      {"rad", v.rad().get_str()},
                                      {"text", v.str()}};
        }
    }
    return out;
}

namespace {

Rational rational_from_text(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace

DensityReport density_from_json(const json& j) {
    DensityReport r;
    for (const auto& row : j.at("rows")) {
        DensityReport::Row out;
        out.level = Int(row.at("n").get<std::string>());
        out.count = Int(row.at("count").get<std::string>());
        out.count_over_n = row.at("count_over_n").get<double>();
        out.area = row.at("area").get<double>();
        out.davenport_gap = row.at("davenport_gap").get<double>();
        r.rows.push_back(out);
    }
    if (j.contains("closed_form")) {
        r.has_closed_form = true;
        const auto& cf = j.at("closed_form");
        if (cf.is_string()) {
            r.closed_form.infinite = true;
        } else {
            r.closed_form.value = QuadVal(rational_from_text(cf.at("rat").get<std::string>()),
                                          rational_from_text(cf.at("coef").get<std::string>()),
                                          Int(cf.at("rad").get<std::string>()));
        }
    }
    return r;
}

json to_json(const std::vector<SearchHit>& hits) {
    json arr = json::array();
    for (const auto& h : hits)
        arr.push_back(json{{"poly", h.poly.str()}, {"report", to_json(h.report)}});
    return json{{"schema", kReportSchema}, {"survivors", arr}};
}

} // namespace sectorpack
