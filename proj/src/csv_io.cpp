#include "vascrew/csv_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "vascrew/errors.hpp"

namespace vascrew {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string loc(const std::filesystem::path& path, std::size_t line_no) {
    return path.string() + ":" + std::to_string(line_no);
}

std::size_t parse_index(const std::string& text, const std::string& context) {
    std::size_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(context + ": expected a non-negative integer, got '" + text + "'");
    return value;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open for reading");
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError(path.string() + ": cannot open for writing");
    return out;
}

constexpr const char* kTrialHeader = "t_s,fx_N,fy_N,fz_N,tx_Nm,ty_Nm,tz_Nm,omega_rad_s,pos_m";
constexpr const char* kBaselineHeader = "phase,fx_N,fy_N,fz_N,tx_Nm,ty_Nm,tz_Nm";
constexpr const char* kMetricsHeader =
    "trial_id,media_name,commanded_angle_deg,v_avg_m_s,f_thrust_max_N,tau_avg_Nm,"
    "omega_avg_rad_s,efficiency,peak_fx_N,peak_fy_N,peak_fz_N";
constexpr const char* kClipsHeader = "trial_id,start_sample,end_sample";
constexpr const char* kParetoHeader = "angle_deg,velocity_m_s,efficiency";

}  // namespace

std::string format_sig6(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_exact(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

double parse_double(const std::string& text, const std::string& context) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(context + ": expected a number, got '" + text + "'");
    return value;
}

TrialLog read_trial_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);

    TrialLog log;
    bool have_rate = false, have_angle = false;
    bool header_seen = false;
    int pos_state = -1;  // -1 unknown, 0 absent, 1 present
    std::vector<double> pos;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        if (stripped.front() == '#') {
            const std::string body = trim(stripped.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;  // plain comment
            const std::string key = trim(body.substr(0, eq));
            const std::string value = trim(body.substr(eq + 1));
            if (key == "media_name") {
                log.media_name = value;
            } else if (key == "commanded_angle_deg") {
                log.commanded_angle = AngleOfAttack(parse_double(value, loc(path, line_no)));
                have_angle = true;
            } else if (key == "sample_rate_hz") {
                log.sample_rate_hz = parse_double(value, loc(path, line_no));
                have_rate = true;
            }
            // unrecognized keys pass through silently
            continue;
        }

        if (!header_seen) {
            if (stripped != kTrialHeader)
                throw ParseError(loc(path, line_no) + ": expected header '" +
                                 std::string(kTrialHeader) + "', got '" + stripped + "'");
            header_seen = true;
            continue;
        }

        const auto f = split_fields(stripped);
        if (f.size() != 9)
            throw ParseError(loc(path, line_no) + ": expected 9 fields, got " +
                             std::to_string(f.size()));
        const std::string where = loc(path, line_no);
        log.t_s.push_back(parse_double(f[0], where));
        log.fx_N.push_back(parse_double(f[1], where));
        log.fy_N.push_back(parse_double(f[2], where));
        log.fz_N.push_back(parse_double(f[3], where));
        log.tx_Nm.push_back(parse_double(f[4], where));
        log.ty_Nm.push_back(parse_double(f[5], where));
        log.tz_Nm.push_back(parse_double(f[6], where));
        log.omega_rad_s.push_back(parse_double(f[7], where));
        const bool has_pos = !f[8].empty();
        if (pos_state == -1) pos_state = has_pos ? 1 : 0;
        if (has_pos != (pos_state == 1))
            throw ParseError(where + ": pos_m present on some rows but not others");
        if (has_pos) pos.push_back(parse_double(f[8], where));
    }

    if (!header_seen) throw ParseError(path.string() + ": no header row found");
    if (!have_rate)
        throw ParseError(path.string() + ": missing '#sample_rate_hz=' metadata comment");
    (void)have_angle;  // angle is optional at parse time; consumers validate
    if (pos_state == 1) log.pos_m = std::move(pos);

    log.validate();
    return log;
}

void write_trial_csv(const std::filesystem::path& path, const TrialLog& log) {
    std::ofstream out = open_for_write(path);
    out << "#media_name=" << log.media_name << "\n";
    out << "#commanded_angle_deg=" << format_exact(log.commanded_angle.degrees()) << "\n";
    out << "#sample_rate_hz=" << format_exact(log.sample_rate_hz) << "\n";
    out << kTrialHeader << "\n";
    for (std::size_t i = 0; i < log.size(); ++i) {
        out << format_exact(log.t_s[i]) << ',' << format_exact(log.fx_N[i]) << ','
            << format_exact(log.fy_N[i]) << ',' << format_exact(log.fz_N[i]) << ','
            << format_exact(log.tx_Nm[i]) << ',' << format_exact(log.ty_Nm[i]) << ','
            << format_exact(log.tz_Nm[i]) << ',' << format_exact(log.omega_rad_s[i]) << ',';
        if (log.pos_m) out << format_exact((*log.pos_m)[i]);
        out << "\n";
    }
    if (!out) throw ParseError(path.string() + ": write failed");
}

BaselinePair read_baseline_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);

    BaselinePair pair;
    bool header_seen = false, have_free = false, have_set = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        if (!header_seen) {
            if (stripped != kBaselineHeader)
                throw ParseError(loc(path, line_no) + ": expected header '" +
                                 std::string(kBaselineHeader) + "', got '" + stripped + "'");
            header_seen = true;
            continue;
        }

        const auto f = split_fields(stripped);
        if (f.size() != 7)
            throw ParseError(loc(path, line_no) + ": expected 7 fields, got " +
                             std::to_string(f.size()));
        const std::string where = loc(path, line_no);
        std::array<double, 6> values{};
        for (int i = 0; i < 6; ++i) values[i] = parse_double(f[i + 1], where);
        if (f[0] == "free_hanging") {
            if (have_free) throw ParseError(where + ": duplicate free_hanging row");
            pair.free_hanging = values;
            have_free = true;
        } else if (f[0] == "set_down") {
            if (have_set) throw ParseError(where + ": duplicate set_down row");
            pair.set_down = values;
            have_set = true;
        } else {
            throw ParseError(where + ": unknown phase '" + f[0] +
                             "' (expected free_hanging or set_down)");
        }
    }
    if (!header_seen) throw ParseError(path.string() + ": no header row found");
    if (!have_free || !have_set)
        throw ParseError(path.string() + ": need one free_hanging and one set_down row");
    pair.validate();
    return pair;
}

void write_baseline_csv(const std::filesystem::path& path, const BaselinePair& pair) {
    std::ofstream out = open_for_write(path);
    out << kBaselineHeader << "\n";
    out << "free_hanging";
    for (double v : pair.free_hanging) out << ',' << format_exact(v);
    out << "\nset_down";
    for (double v : pair.set_down) out << ',' << format_exact(v);
    out << "\n";
    if (!out) throw ParseError(path.string() + ": write failed");
}

void write_metrics_csv(const std::filesystem::path& path, const std::vector<TrialRecord>& rows) {
    std::ofstream out = open_for_write(path);
    out << kMetricsHeader << "\n";
    for (const auto& r : rows) {
        out << r.trial_id << ',' << r.metrics.media_name << ','
            << format_sig6(r.metrics.commanded_angle.degrees()) << ','
            << format_sig6(r.metrics.v_avg_m_s) << ',' << format_sig6(r.metrics.f_thrust_max_N)
            << ',' << format_sig6(r.metrics.tau_avg_Nm) << ','
            << format_sig6(r.metrics.omega_avg_rad_s) << ',' << format_sig6(r.metrics.efficiency)
            << ',' << format_sig6(r.peak_force_N[0]) << ',' << format_sig6(r.peak_force_N[1])
            << ',' << format_sig6(r.peak_force_N[2]) << "\n";
    }
    if (!out) throw ParseError(path.string() + ": write failed");
}

std::vector<TrialRecord> read_metrics_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);

    std::vector<TrialRecord> rows;
    bool header_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        if (!header_seen) {
            if (stripped != kMetricsHeader)
                throw ParseError(loc(path, line_no) + ": expected header '" +
                                 std::string(kMetricsHeader) + "', got '" + stripped + "'");
            header_seen = true;
            continue;
        }

        const auto f = split_fields(stripped);
        if (f.size() != 11)
            throw ParseError(loc(path, line_no) + ": expected 11 fields, got " +
                             std::to_string(f.size()));
        const std::string where = loc(path, line_no);
        TrialRecord r;
        r.trial_id = f[0];
        r.metrics.media_name = f[1];
        r.metrics.commanded_angle = AngleOfAttack(parse_double(f[2], where));
        r.metrics.v_avg_m_s = parse_double(f[3], where);
        r.metrics.f_thrust_max_N = parse_double(f[4], where);
        r.metrics.tau_avg_Nm = parse_double(f[5], where);
        r.metrics.omega_avg_rad_s = parse_double(f[6], where);
        r.metrics.efficiency = parse_double(f[7], where);
        r.peak_force_N = {parse_double(f[8], where), parse_double(f[9], where),
                          parse_double(f[10], where)};
        rows.push_back(std::move(r));
    }
    if (!header_seen) throw ParseError(path.string() + ": no header row found");
    return rows;
}

std::map<std::string, std::pair<std::size_t, std::size_t>> read_clips_csv(
    const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);

    std::map<std::string, std::pair<std::size_t, std::size_t>> clips;
    bool header_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        if (!header_seen) {
            if (stripped != kClipsHeader)
                throw ParseError(loc(path, line_no) + ": expected header '" +
                                 std::string(kClipsHeader) + "', got '" + stripped + "'");
            header_seen = true;
            continue;
        }

        const auto f = split_fields(stripped);
        if (f.size() != 3)
            throw ParseError(loc(path, line_no) + ": expected 3 fields, got " +
                             std::to_string(f.size()));
        const std::string where = loc(path, line_no);
        const std::size_t start = parse_index(f[1], where);
        const std::size_t end = parse_index(f[2], where);
        if (start >= end) throw ParseError(where + ": start_sample must be < end_sample");
        if (!clips.emplace(f[0], std::make_pair(start, end)).second)
            throw ParseError(where + ": duplicate trial_id '" + f[0] + "'");
    }
    if (!header_seen) throw ParseError(path.string() + ": no header row found");
    return clips;
}

void write_pareto_csv(const std::filesystem::path& path, const std::vector<ParetoPoint>& front) {
    std::ofstream out = open_for_write(path);
    out << kParetoHeader << "\n";
    for (const auto& p : front)
        out << format_sig6(p.angle_deg) << ',' << format_sig6(p.velocity_m_s) << ','
            << format_sig6(p.efficiency) << "\n";
    if (!out) throw ParseError(path.string() + ": write failed");
}

}  // namespace vascrew
