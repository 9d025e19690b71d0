#pragma once

// Report emission: JSONL (one object per algebra, then a summary line) or
// CSV (flat columns, summary as a trailing comment). Exit status 2 when
// any claim is Violated, otherwise 0; operational failures are the
// caller's 1.

#include "quivhom/report.hpp"

#include <ostream>

namespace quivhom {

enum class EmitFormat { Jsonl, Csv };

struct ClaimCounts {
    int confirmed = 0;
    int undetermined = 0;
    int violated = 0;
};

struct EmitSummary {
    int algebras = 0;
    int violated_total = 0;
    std::map<std::string, ClaimCounts> claims;
};

inline EmitSummary summarize(const std::vector<Report>& reports) {
    EmitSummary s;
    s.algebras = (int)reports.size();
    for (const Report& r : reports) {
        for (const ClaimVerdict& v : r.verdicts) {
            ClaimCounts& c = s.claims[v.claim_id];
            switch (v.status) {
            case ClaimStatus::Confirmed:
                ++c.confirmed;
                break;
            case ClaimStatus::ConsistentUndetermined:
                ++c.undetermined;
                break;
            case ClaimStatus::Violated:
                ++c.violated;
                ++s.violated_total;
                break;
            }
        }
    }
    return s;
}

inline int emit(const std::vector<Report>& reports, EmitFormat format, std::ostream& out,
                bool include_timing = false) {
    EmitSummary s = summarize(reports);
    if (format == EmitFormat::Jsonl) {
        for (const Report& r : reports)
            out << to_json(r, include_timing).dump() << "\n";
        ordered_json js;
        js["summary"]["algebras"] = s.algebras;
        js["summary"]["violated_total"] = s.violated_total;
        ordered_json claims;
        for (const auto& [id, c] : s.claims)
            claims[id] = {{"confirmed", c.confirmed},
                          {"consistent_undetermined", c.undetermined},
                          {"violated", c.violated}};
        js["summary"]["claims"] = std::move(claims);
        out << js.dump() << "\n";
    } else {
        out << "algebra_id,label,prime,vertices,total_dim,loewy_length,gldim,id_J,id_J2,"
               "id_JmodJ2,local,selfinjective,nakayama,gorenstein";
        for (int c = 1; c <= 8; ++c)
            out << ",C" << c;
        if (include_timing)
            out << ",timing_ms";
        out << "\n";
        for (const Report& r : reports) {
            out << r.algebra_id << "," << r.label << "," << r.prime << "," << r.vertices << ","
                << r.total_dim << "," << r.loewy_length << "," << r.gldim.str() << ","
                << r.id_J.str() << "," << r.id_J2.str() << "," << r.id_JmodJ2.str() << ","
                << (r.local ? 1 : 0) << "," << (r.selfinjective ? 1 : 0) << ","
                << (r.nakayama ? 1 : 0) << "," << to_string(r.gorenstein);
            for (const ClaimVerdict& v : r.verdicts)
                out << "," << to_string(v.status);
            if (include_timing)
                out << "," << r.timing_ms;
            out << "\n";
        }
        out << "#summary,algebras=" << s.algebras << ",violated_total=" << s.violated_total;
        for (const auto& [id, c] : s.claims)
            out << "," << id << "=" << c.confirmed << "/" << c.undetermined << "/" << c.violated;
        out << "\n";
    }
    out.flush();
    return s.violated_total > 0 ? 2 : 0;
}

} // namespace quivhom
