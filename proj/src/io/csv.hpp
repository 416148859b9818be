#ifndef EHPLAN_IO_CSV_HPP
#define EHPLAN_IO_CSV_HPP

#include <string>

#include "scenarios/scenarios.hpp"

namespace ehplan {

// Fixed column contract for the planning-year file.
inline constexpr const char* kYearCsvHeader =
    "hour,load_e_mw,load_h_mw,load_c_mw,wind_mps,irradiance_wpm2,price_e_rmb_per_mwh";

YearSeries ingest_year(const std::string& path);
void write_year_csv(const YearSeries& year, const std::string& path);

void write_reduction_trace_csv(const ReductionTrace& trace, const std::string& path);

}  // namespace ehplan

#endif
