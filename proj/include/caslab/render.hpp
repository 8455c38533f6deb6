#pragma once

#include "caslab/harness.hpp"

namespace caslab {

// CLI-facing serialization. Text output is rendered from the same JSON
// payloads so both modes carry identical values.

uint32_t parse_parabolic(const std::string& csv, int rank); // "2,3" -> mask, 1-based

Json roots_json(const RootSystem& rs);
Json weyl_json(const RootSystem& rs, uint32_t parabolic);
Json greedy_json(const Context& ctx, const Degree& d);
Json minimal_json(const Context& ctx, const Context& ctxB);
Json dx_json(const Context& ctx);
Json lift_json(const Context& ctx, const Context& ctxB, const Degree& d);
Json cascade_json(const Context& ctxB, const Degree& e, const Context& ctxP);
Json certificate_json(const Context& ctx, const Certificate& cert);

std::string render_text(const Json& payload); // generic table/record printer

} // namespace caslab
