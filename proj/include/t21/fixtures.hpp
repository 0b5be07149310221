#pragma once

namespace t21 {

// Tables 3-1 / 4-1 fixtures, embedded at build time from data/*.json.
const char* table_3_1_json();
const char* table_4_1_json();

}  // namespace t21
