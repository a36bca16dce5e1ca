#include "lgrape/csv.hpp"

#include <cmath>
#include <cstdio>

namespace lgrape {

namespace {

void append_cell(std::string& out, const std::optional<double>& v) {
  out += ',';
  if (v) out += format_real(*v);
}

void append_cell(std::string& out, double v) {
  out += ',';
  out += format_real(v);
}

}  // namespace

void set_fisher(ResultRow& row, double fq) {
  row.fq = fq;
  row.fq_over_t = fq / row.T;
  row.qcrb = fq > 0.0 ? std::optional<double>(1.0 / std::sqrt(fq)) : std::nullopt;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string_view csv_header() {
  return "scheme,noise,T,dt,gamma1,gamma2,eta1,eta2,omega0,theta,p,fq,fq_over_t,qcrb,iterations,"
         "seed,wall_time_s";
}

std::string to_csv_line(const ResultRow& row) {
  std::string out = row.scheme;
  out += ',';
  out += row.noise;
  append_cell(out, row.T);
  append_cell(out, row.dt);
  append_cell(out, row.gamma1);
  append_cell(out, row.gamma2);
  append_cell(out, row.eta1);
  append_cell(out, row.eta2);
  append_cell(out, row.omega0);
  append_cell(out, row.theta);
  append_cell(out, row.p);
  append_cell(out, row.fq);
  append_cell(out, row.fq_over_t);
  append_cell(out, row.qcrb);
  out += ',' + std::to_string(row.iterations);
  out += ',' + std::to_string(row.seed);
  append_cell(out, row.wall_time_s);
  return out;
}

}  // namespace lgrape
