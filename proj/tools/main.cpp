#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "presets.hpp"
#include "wvlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagged = 2;
constexpr int kExitUsage = 64;
constexpr int kExitTruncation = 65;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;

using Cell = std::variant<double, long long, std::string>;
using Row = std::vector<Cell>;

struct Failure {
    wv_status status;
    std::string message;
};

int exit_code(wv_status st) {
    switch (st) {
        case WV_OK: return kExitOk;
        case WV_ERR_TRUNCATION_RISK:
        case WV_ERR_INVALID_TRUNCATION: return kExitTruncation;
        case WV_ERR_IO: return kExitIo;
        case WV_ERR_INTERNAL: return kExitSoftware;
        default: return kExitUsage;
    }
}

struct Options {
    std::string quantity;
    std::map<std::string, std::vector<std::string>> lists;
    std::string engine = "both";
    std::string format = "csv";
    std::string output;
    std::string preset;
    std::string pointer = "spssv";
    std::string slice = "real";
    std::string grid_out;
    int n_max = 20;
    int truncation = 0;
    int resolution = 201;
    unsigned threads = 0;
    bool force = false;
    bool strict = false;
    bool summary = false;
    bool list_presets = false;
};

const std::vector<std::string> kListKeys{"alpha", "delta", "s", "r", "theta", "eta", "zeta", "Theta", "region"};
const std::map<std::string, std::string> kDefaults{{"alpha", "8pi/9"}, {"delta", "0"},   {"s", "0.5"},
                                                   {"r", "0.1"},       {"theta", "0"},   {"eta", "0.1"},
                                                   {"zeta", "0"},      {"Theta", "pi/4"}, {"region", "-6,6,-6,6"}};

std::vector<double> axis(const Options& o, const std::string& key) {
    auto it = o.lists.find(key);
    if (it != o.lists.end() && !it->second.empty()) return cli::parse_list(it->second);
    return cli::parse_list({kDefaults.at(key)});
}

bool given(const Options& o, const std::string& key) {
    auto it = o.lists.find(key);
    return it != o.lists.end() && !it->second.empty();
}

// Context per worker; the library context is not shared across threads.
struct Context {
    wv_context* ctx = nullptr;
    Context(const Options& o, bool oracle, unsigned threads) {
        if (wv_context_create(&ctx) != WV_OK) throw std::bad_alloc();
        if (o.truncation > 0) check(wv_context_set_truncation(ctx, o.truncation, o.truncation));
        check(wv_context_set_force(ctx, o.force));
        check(wv_context_set_oracle(ctx, oracle));
        check(wv_context_set_threads(ctx, threads));
    }
    ~Context() { wv_context_destroy(ctx); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
    void check(wv_status st) const {
        if (st != WV_OK) throw Failure{st, wv_context_last_error(ctx)};
    }
};

bool use_oracle(const Options& o) { return o.engine != "closed"; }
bool use_closed(const Options& o) { return o.engine != "oracle"; }

void metric_header(std::vector<std::string>& cols, const Options& o, const std::string& name, bool complex) {
    auto add = [&](const std::string& suffix) {
        if (complex) {
            cols.push_back(name + "_re_" + suffix);
            cols.push_back(name + "_im_" + suffix);
        } else {
            cols.push_back(name + "_" + suffix);
        }
    };
    if (use_closed(o)) add("closed");
    if (use_oracle(o)) add("oracle");
    if (o.engine == "both") {
        cols.push_back("rel_diff");
        cols.push_back("flag");
    }
}

void metric_cells(Row& row, const Options& o, const wv_metric& m, bool complex) {
    if (use_closed(o)) {
        row.push_back(m.closed_re);
        if (complex) row.push_back(m.closed_im);
    }
    if (use_oracle(o)) {
        row.push_back(m.oracle_re);
        if (complex) row.push_back(m.oracle_im);
    }
    if (o.engine == "both") {
        row.push_back(m.rel_diff);
        row.push_back(static_cast<long long>(m.flag));
    }
}

struct Table {
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

// Evaluates fn over all points on worker threads, keeping point order.
template <class Point, class Fn>
std::vector<Row> evaluate(const Options& o, const std::vector<Point>& points, Fn fn, bool oracle = true,
                          unsigned workers = 0) {
    if (workers == 0) workers = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
    std::vector<std::vector<Row>> slots(points.size());
    std::vector<std::unique_ptr<Failure>> failures(points.size());
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (points.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk, end = std::min(points.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&, begin, end] {
                try {
                    Context ctx(o, oracle, workers == 1 ? o.threads : 1);
                    for (std::size_t i = begin; i < end; ++i) {
                        try {
                            slots[i] = fn(ctx, points[i]);
                        } catch (const Failure& f) {
                            failures[i] = std::make_unique<Failure>(f);
                            return;
                        }
                    }
                } catch (const Failure& f) {
                    failures[begin] = std::make_unique<Failure>(f);
                }
            });
        }
    }
    for (auto& f : failures)
        if (f) throw *f;
    std::vector<Row> rows;
    for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(rows));
    return rows;
}

struct SpssvPoint {
    wv_spssv_params p;
};
struct TmsvPoint {
    wv_tmsv_params p;
    double big_theta = 0.0;
};

std::vector<SpssvPoint> spssv_points(const Options& o) {
    std::vector<SpssvPoint> pts;
    for (double a : axis(o, "alpha"))
        for (double d : axis(o, "delta"))
            for (double s : axis(o, "s"))
                for (double r : axis(o, "r"))
                    for (double th : axis(o, "theta")) pts.push_back({{a, d, s, r, th}});
    return pts;
}

std::vector<TmsvPoint> tmsv_points(const Options& o, bool with_theta) {
    std::vector<TmsvPoint> pts;
    const auto thetas = with_theta ? axis(o, "Theta") : std::vector<double>{0.0};
    for (double a : axis(o, "alpha"))
        for (double d : axis(o, "delta"))
            for (double s : axis(o, "s"))
                for (double e : axis(o, "eta"))
                    for (double z : axis(o, "zeta"))
                        for (double t : thetas) pts.push_back({{a, d, s, e, z}, t});
    return pts;
}

Row spssv_prefix(const wv_spssv_params& p) { return {p.alpha, p.delta, p.s, p.r, p.theta}; }
Row tmsv_prefix(const wv_tmsv_params& p) { return {p.alpha, p.delta, p.s, p.eta, p.zeta}; }
const std::vector<std::string> kSpssvCols{"alpha", "delta", "s", "r", "theta"};
const std::vector<std::string> kTmsvCols{"alpha", "delta", "s", "eta", "zeta"};

using SpssvMetricFn = wv_status (*)(wv_context*, const wv_spssv_params*, wv_metric*);
using TmsvMetricFn = wv_status (*)(wv_context*, const wv_tmsv_params*, wv_metric*);

Table spssv_metric(const Options& o, const std::string& name, SpssvMetricFn f, bool complex) {
    Table t{kSpssvCols, {}};
    metric_header(t.columns, o, name, complex);
    t.rows = evaluate(o, spssv_points(o), [&](Context& c, const SpssvPoint& pt) {
        wv_metric m{};
        c.check(f(c.ctx, &pt.p, &m));
        Row row = spssv_prefix(pt.p);
        metric_cells(row, o, m, complex);
        return std::vector<Row>{row};
    }, use_oracle(o));
    return t;
}

Table tmsv_metric(const Options& o, const std::string& name, TmsvMetricFn f, bool complex) {
    Table t{kTmsvCols, {}};
    metric_header(t.columns, o, name, complex);
    t.rows = evaluate(o, tmsv_points(o, false), [&](Context& c, const TmsvPoint& pt) {
        wv_metric m{};
        c.check(f(c.ctx, &pt.p, &m));
        Row row = tmsv_prefix(pt.p);
        metric_cells(row, o, m, complex);
        return std::vector<Row>{row};
    }, use_oracle(o));
    return t;
}

Table sum_squeeze(const Options& o) {
    Table t{kTmsvCols, {}};
    t.columns.push_back("Theta");
    metric_header(t.columns, o, "S", false);
    t.rows = evaluate(o, tmsv_points(o, true), [&](Context& c, const TmsvPoint& pt) {
        wv_metric m{};
        c.check(wv_sum_squeezing_tmsv(c.ctx, &pt.p, pt.big_theta, &m));
        Row row = tmsv_prefix(pt.p);
        row.push_back(pt.big_theta);
        metric_cells(row, o, m, false);
        return std::vector<Row>{row};
    }, use_oracle(o));
    return t;
}

Table photon_dist(const Options& o) {
    if (o.n_max < 0) throw Failure{WV_ERR_DOMAIN, "--n-max must be non-negative"};
    Table t{kSpssvCols, {}};
    t.columns.push_back("n");
    if (use_oracle(o)) t.columns.push_back("P_n_oracle");
    if (use_closed(o)) t.columns.push_back("P_n_closed");
    t.rows = evaluate(o, spssv_points(o), [&](Context& c, const SpssvPoint& pt) {
        std::vector<double> oracle(o.n_max + 1), closed(o.n_max + 1);
        c.check(wv_photon_dist_spssv(c.ctx, &pt.p, o.n_max, use_oracle(o) ? oracle.data() : nullptr,
                                     use_closed(o) ? closed.data() : nullptr));
        std::vector<Row> rows;
        for (int n = 0; n <= o.n_max; ++n) {
            Row row = spssv_prefix(pt.p);
            row.push_back(static_cast<long long>(n));
            if (use_oracle(o)) row.push_back(oracle[n]);
            if (use_closed(o)) row.push_back(closed[n]);
            rows.push_back(std::move(row));
        }
        return rows;
    }, use_oracle(o));
    return t;
}

void shift_header(std::vector<std::string>& cols, const Options& o) {
    if (use_oracle(o)) cols.insert(cols.end(), {"dX_over_g", "dP_sigma2_over_g"});
    if (use_closed(o)) cols.insert(cols.end(), {"dX_over_g_closed", "dP_sigma2_over_g_closed"});
    cols.insert(cols.end(), {"weak_dX", "weak_dP", "strong_dX", "strong_dP"});
}

void shift_cells(Row& row, const Options& o, const wv_shifts& s) {
    if (use_oracle(o)) row.insert(row.end(), {s.dX_over_g, s.dP_sigma2_over_g});
    if (use_closed(o)) row.insert(row.end(), {s.closed_dX_over_g, s.closed_dP_sigma2_over_g});
    row.insert(row.end(), {s.weak_dX, s.weak_dP, s.strong_dX, s.strong_dP});
}

Table shifts(const Options& o) {
    if (o.pointer == "tmsv") {
        Table t{kTmsvCols, {}};
        shift_header(t.columns, o);
        t.rows = evaluate(o, tmsv_points(o, false), [&](Context& c, const TmsvPoint& pt) {
            wv_shifts s{};
            c.check(wv_shifts_tmsv(c.ctx, &pt.p, &s));
            Row row = tmsv_prefix(pt.p);
            shift_cells(row, o, s);
            return std::vector<Row>{row};
        }, use_oracle(o));
        return t;
    }
    Table t{kSpssvCols, {}};
    shift_header(t.columns, o);
    t.rows = evaluate(o, spssv_points(o), [&](Context& c, const SpssvPoint& pt) {
        wv_shifts s{};
        c.check(wv_shifts_spssv(c.ctx, &pt.p, &s));
        Row row = spssv_prefix(pt.p);
        shift_cells(row, o, s);
        return std::vector<Row>{row};
    }, use_oracle(o));
    return t;
}

Table transition(const Options& o) {
    const bool two = o.pointer == "tmsv";
    Table t = two ? tmsv_metric(o, "sigma_x_T", wv_transition_tmsv, true)
                  : spssv_metric(o, "sigma_x_S", wv_transition_spssv, true);
    // Success probability from the closed form alongside each row.
    Options closed = o;
    closed.engine = "closed";
    const Table p = two ? tmsv_metric(closed, "P_T", wv_success_prob_tmsv, false)
                        : spssv_metric(closed, "P_S", wv_success_prob_spssv, false);
    t.columns.push_back(two ? "P_T" : "P_S");
    for (std::size_t i = 0; i < t.rows.size(); ++i) t.rows[i].push_back(p.rows[i].back());
    return t;
}

wv_region region_of(const Options& o) {
    const auto v = axis(o, "region");
    if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3]))
        throw Failure{WV_ERR_CONFIG, "--region needs x_min,x_max,y_min,y_max with min < max"};
    return {v[0], v[1], v[2], v[3]};
}

std::vector<wv_engine> grid_engines(const Options& o) {
    std::vector<wv_engine> e;
    if (use_oracle(o)) e.push_back(WV_ENGINE_ORACLE);
    if (use_closed(o)) e.push_back(WV_ENGINE_CLOSED);
    return e;
}

const char* engine_name(wv_engine e) { return e == WV_ENGINE_ORACLE ? "oracle" : "closed"; }

using GridPtr = std::unique_ptr<wv_grid, decltype(&wv_grid_destroy)>;

// One grid per engine for a parameter point, flattened into rows or a summary.
template <class MakeGrid>
std::vector<Row> grid_rows(const Options& o, Context& c, const Row& prefix, std::size_t index, MakeGrid make) {
    std::vector<GridPtr> grids;
    for (wv_engine e : grid_engines(o)) {
        wv_grid* g = nullptr;
        c.check(make(e, &g));
        grids.emplace_back(g, &wv_grid_destroy);
        if (!o.grid_out.empty()) {
            const std::string path = o.grid_out + std::to_string(index) + "_" + engine_name(e) + ".bin";
            c.check(wv_grid_write_binary(g, path.c_str()));
        }
    }
    std::vector<Row> rows;
    if (o.summary) {
        Row row = prefix;
        for (const auto& g : grids) {
            int peaks = 0;
            double sep = 0.0;
            c.check(wv_grid_split(g.get(), &peaks, &sep));
            row.insert(row.end(), {Cell{wv_grid_integral(g.get())}, Cell{static_cast<long long>(peaks)}, Cell{sep}});
        }
        rows.push_back(std::move(row));
        return rows;
    }
    int nx = 0, ny = 0;
    c.check(wv_grid_shape(grids.front().get(), &nx, &ny));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            double x = 0.0, y = 0.0;
            c.check(wv_grid_point(grids.front().get(), i, j, &x, &y));
            Row row = prefix;
            row.insert(row.end(), {x, y});
            for (const auto& g : grids) row.push_back(wv_grid_values(g.get())[static_cast<std::size_t>(i) * ny + j]);
            rows.push_back(std::move(row));
        }
    return rows;
}

void grid_header(std::vector<std::string>& cols, const Options& o) {
    if (o.summary) {
        for (wv_engine e : grid_engines(o))
            for (const char* base : {"integral_", "n_peaks_", "separation_"}) cols.push_back(base + std::string(engine_name(e)));
        return;
    }
    cols.insert(cols.end(), {"x", "y"});
    for (wv_engine e : grid_engines(o)) cols.push_back(std::string("Q_") + engine_name(e));
}

Table qfunc_single(const Options& o) {
    Table t{kSpssvCols, {}};
    grid_header(t.columns, o);
    const wv_region region = region_of(o);
    const auto pts = spssv_points(o);
    std::size_t index = 0;
    Context ctx(o, use_oracle(o), o.threads);
    for (const auto& pt : pts) {
        auto rows = grid_rows(o, ctx, spssv_prefix(pt.p), index++, [&](wv_engine e, wv_grid** g) {
            return wv_q_grid_single(ctx.ctx, &pt.p, &region, o.resolution, e, g);
        });
        std::move(rows.begin(), rows.end(), std::back_inserter(t.rows));
    }
    return t;
}

wv_slice slice_of(const Options& o) {
    if (o.slice == "real") return {0, 2, 0.0, 0.0};
    if (o.slice == "imag") return {1, 3, 0.0, 0.0};
    throw Failure{WV_ERR_CONFIG, "--slice must be real or imag"};
}

Table qfunc_two(const Options& o) {
    Table t{kTmsvCols, {}};
    grid_header(t.columns, o);
    const wv_region region = region_of(o);
    const wv_slice slice = slice_of(o);
    std::size_t index = 0;
    Context ctx(o, use_oracle(o), o.threads);
    for (const auto& pt : tmsv_points(o, false)) {
        auto rows = grid_rows(o, ctx, tmsv_prefix(pt.p), index++, [&](wv_engine e, wv_grid** g) {
            return wv_q_grid_two(ctx.ctx, &pt.p, &slice, &region, o.resolution, e, g);
        });
        std::move(rows.begin(), rows.end(), std::back_inserter(t.rows));
    }
    return t;
}

Table audit(const Options& o, std::size_t& flagged) {
    if (o.engine != "both") throw Failure{WV_ERR_CONFIG, "audit requires --engine both"};
    const auto delta = axis(o, "delta");
    if (delta.size() != 1) throw Failure{WV_ERR_CONFIG, "audit takes a single --delta"};
    std::vector<double> alpha, s, squeeze;
    if (given(o, "alpha")) alpha = axis(o, "alpha");
    if (given(o, "s")) s = axis(o, "s");
    if (given(o, "r")) squeeze = axis(o, "r");
    Context ctx(o, true, o.threads);
    wv_audit* raw = nullptr;
    ctx.check(wv_audit_run(ctx.ctx, alpha.empty() ? nullptr : alpha.data(), alpha.size(),
                           s.empty() ? nullptr : s.data(), s.size(), squeeze.empty() ? nullptr : squeeze.data(),
                           squeeze.size(), delta.front(), &raw));
    std::unique_ptr<wv_audit, decltype(&wv_audit_destroy)> a(raw, &wv_audit_destroy);
    Table t{{"quantity", "alpha", "delta", "s", "squeeze", "closed_re", "closed_im", "oracle_re", "oracle_im",
             "abs_diff", "rel_diff", "flag"},
            {}};
    for (std::size_t i = 0; i < wv_audit_count(a.get()); ++i) {
        const char* name = nullptr;
        double params[4];
        wv_metric m{};
        ctx.check(wv_audit_entry(a.get(), i, &name, params, &m));
        t.rows.push_back({std::string(name), params[0], params[1], params[2], params[3], m.closed_re, m.closed_im,
                          m.oracle_re, m.oracle_im, m.abs_diff, m.rel_diff, static_cast<long long>(m.flag)});
    }
    flagged = wv_audit_flag_count(a.get());
    return t;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string render_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit([&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) out << format_double(v);
                else out << v;
            }, row[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const Table& t, const std::string& quantity) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit([&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    if (std::isfinite(v)) rec[t.columns[i]] = std::strtod(format_double(v).c_str(), nullptr);
                    else rec[t.columns[i]] = nullptr;
                } else {
                    rec[t.columns[i]] = v;
                }
            }, row[i]);
        records.push_back(std::move(rec));
    }
    nlohmann::ordered_json doc{{"quantity", quantity}, {"columns", t.columns}, {"records", std::move(records)}};
    return doc.dump(1) + "\n";
}

bool any_flag(const Table& t) {
    const auto it = std::find(t.columns.begin(), t.columns.end(), "flag");
    if (it == t.columns.end()) return false;
    const auto col = static_cast<std::size_t>(it - t.columns.begin());
    return std::any_of(t.rows.begin(), t.rows.end(),
                       [&](const Row& r) { return std::get<long long>(r[col]) != 0; });
}

void apply_preset(Options& o, const CLI::App& app) {
    if (o.preset.empty()) return;
    const cli::Preset* p = cli::find_preset(o.preset);
    if (!p) throw Failure{WV_ERR_CONFIG, "unknown preset '" + o.preset + "' (see --list-presets)"};
    if (o.quantity.empty()) o.quantity = p->quantity;
    else if (o.quantity != p->quantity)
        throw Failure{WV_ERR_CONFIG, "preset '" + p->name + "' is for " + p->quantity + ", not " + o.quantity};
    for (const auto& [key, value] : p->values) {
        if (app.count("--" + key) > 0) continue;
        if (auto it = o.lists.find(key); it != o.lists.end()) it->second = {value};
        else if (key == "n-max") o.n_max = std::stoi(value);
        else if (key == "resolution") o.resolution = std::stoi(value);
        else if (key == "pointer") o.pointer = value;
        else if (key == "slice") o.slice = value;
    }
}

int run(Options& o) {
    std::size_t flagged = 0;
    Table t;
    const std::string& q = o.quantity;
    if (q == "prob_s") t = spssv_metric(o, "P_S", wv_success_prob_spssv, false);
    else if (q == "prob_t") t = tmsv_metric(o, "P_T", wv_success_prob_tmsv, false);
    else if (q == "skew") t = spssv_metric(o, "W", wv_skew_spssv, false);
    else if (q == "as_squeeze") {
        if (!use_oracle(o)) throw Failure{WV_ERR_CONFIG, "as_squeeze needs the oracle fourth moment; use --engine oracle or both"};
        t = spssv_metric(o, "AS", wv_as_squeezing_spssv, false);
    } else if (q == "sum_squeeze") t = sum_squeeze(o);
    else if (q == "photon_dist") t = photon_dist(o);
    else if (q == "shifts") t = shifts(o);
    else if (q == "transition") t = transition(o);
    else if (q == "qfunc_single") t = qfunc_single(o);
    else if (q == "qfunc_two") t = qfunc_two(o);
    else if (q == "audit") t = audit(o, flagged);
    else throw Failure{WV_ERR_CONFIG, "unknown quantity '" + q + "'"};

    const std::string text = o.format == "json" ? render_json(t, q) : render_csv(t);
    if (o.output.empty()) {
        std::cout << text << std::flush;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!(f << text)) throw Failure{WV_ERR_IO, "cannot write " + o.output};
    }
    if (q == "audit") std::cerr << "audit: " << t.rows.size() << " checks, " << flagged << " flagged\n";
    return o.strict && any_flag(t) ? kExitFlagged : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Post-selected von Neumann measurement sweeps with SPSSV and TMSV pointers."};
    app.option_defaults()->always_capture_default();
    Options o;
    app.add_option("quantity", o.quantity,
                   "prob_s | prob_t | skew | as_squeeze | sum_squeeze | photon_dist | shifts | transition | "
                   "qfunc_single | qfunc_two | audit");
    const std::map<std::string, std::string> help{
        {"alpha", "pre-selection angle(s)"}, {"delta", "relative phase(s)"}, {"s", "coupling strength(s)"},
        {"r", "single-mode squeeze; also the audit squeeze axis"}, {"theta", "single-mode squeeze phase(s)"},
        {"eta", "two-mode squeeze(s)"}, {"zeta", "two-mode squeeze phase(s)"}, {"Theta", "sum-squeezing quadrature angle(s)"},
        {"region", "grid region x_min,x_max,y_min,y_max"}};
    for (const auto& key : kListKeys) {
        o.lists[key];
        app.add_option("--" + key, o.lists[key], help.at(key) + " (values, a:b:step ranges, pi arithmetic)")
            ->delimiter(',')
            ->default_str(kDefaults.at(key));
    }
    app.add_option("--n-max", o.n_max, "largest photon number for photon_dist");
    app.add_option("--engine", o.engine, "oracle | closed | both")->check(CLI::IsMember({"oracle", "closed", "both"}));
    app.add_option("--truncation", o.truncation, "Fock truncation per mode (0 keeps 80 single, 40 two-mode)");
    app.add_flag("--force", o.force, "evaluate past the displacement accuracy guard");
    app.add_flag("--strict", o.strict, "exit 2 when any closed form is flagged against the oracle");
    app.add_option("--preset", o.preset, "named parameter set (see --list-presets)");
    app.add_flag("--list-presets", o.list_presets, "print preset names and exit");
    app.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", o.output, "output file (stdout when omitted)");
    app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
    app.add_option("--pointer", o.pointer, "spssv | tmsv for shifts and transition")
        ->check(CLI::IsMember({"spssv", "tmsv"}));
    app.add_option("--slice", o.slice, "real | imag two-mode slice")->check(CLI::IsMember({"real", "imag"}));
    app.add_option("--resolution", o.resolution, "grid points per axis")->check(CLI::Range(2, 5001));
    app.add_flag("--summary", o.summary, "emit integral and peak split per grid instead of grid points");
    app.add_option("--grid-out", o.grid_out, "also write each grid as binary to PREFIX<k>_<engine>.bin");
    app.set_config("--config", "", "key=value file; keys are option names without dashes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (o.list_presets) {
        for (const auto& p : cli::presets()) std::cout << p.name << "\t" << p.quantity << "\t" << p.description << "\n";
        return kExitOk;
    }
    try {
        apply_preset(o, app);
        if (o.quantity.empty()) throw Failure{WV_ERR_CONFIG, "a quantity or --preset is required"};
        return run(o);
    } catch (const Failure& f) {
        std::cerr << "wvlab: " << wv_status_string(f.status) << ": " << f.message << "\n";
        return exit_code(f.status);
    } catch (const cli::ParseError& e) {
        std::cerr << "wvlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "wvlab: " << e.what() << "\n";
        return kExitSoftware;
    }
}
