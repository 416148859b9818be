#include "io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ehplan {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_num(const std::string& field, int line_no, const char* col) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != field.size() || field.empty()) {
        throw data_error("line " + std::to_string(line_no) + ": bad " + col + " value '" + field +
                         "'");
    }
    return v;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

YearSeries ingest_year(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open year file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw data_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kYearCsvHeader) {
        throw data_error(path + ": unexpected header '" + line + "'");
    }

    YearSeries year;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != 7) {
            throw data_error("line " + std::to_string(line_no) + ": expected 7 fields, got " +
                             std::to_string(fields.size()));
        }
        const double hour = parse_num(fields[0], line_no, "hour");
        if (hour != static_cast<double>(year.records.size())) {
            throw data_error("line " + std::to_string(line_no) + ": hour " + fields[0] +
                             " out of sequence (expected " +
                             std::to_string(year.records.size()) + ")");
        }
        YearRecord r;
        r.load_e = parse_num(fields[1], line_no, "load_e_mw");
        r.load_h = parse_num(fields[2], line_no, "load_h_mw");
        r.load_c = parse_num(fields[3], line_no, "load_c_mw");
        r.wind_speed = parse_num(fields[4], line_no, "wind_mps");
        r.irradiance = parse_num(fields[5], line_no, "irradiance_wpm2");
        r.price_e = parse_num(fields[6], line_no, "price_e_rmb_per_mwh");
        if (r.load_e < 0.0 || r.load_h < 0.0 || r.load_c < 0.0) {
            throw data_error("line " + std::to_string(line_no) + ": negative load");
        }
        if (r.wind_speed < 0.0) {
            throw data_error("line " + std::to_string(line_no) + ": negative wind speed");
        }
        if (r.irradiance < 0.0) {
            throw data_error("line " + std::to_string(line_no) + ": negative irradiance");
        }
        year.records.push_back(r);
    }
    if (year.records.empty()) throw data_error(path + ": no data rows");
    year.validate();
    return year;
}

void write_year_csv(const YearSeries& year, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write year file: " + path);
    out << kYearCsvHeader << "\n";
    for (size_t h = 0; h < year.records.size(); ++h) {
        const YearRecord& r = year.records[h];
        out << h << ',' << fmt(r.load_e) << ',' << fmt(r.load_h) << ',' << fmt(r.load_c) << ','
            << fmt(r.wind_speed) << ',' << fmt(r.irradiance) << ',' << fmt(r.price_e) << "\n";
    }
}

void write_reduction_trace_csv(const ReductionTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write trace file: " + path);
    out << "iteration,removed_id,absorbed_by,pd_value\n";
    for (const ReductionStep& s : trace) {
        out << s.iteration << ',' << s.removed_id << ',' << s.absorbed_by << ','
            << fmt(s.pd_value) << "\n";
    }
}

}  // namespace ehplan
