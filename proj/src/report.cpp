#include "qbern/report.hpp"

#include <sstream>

namespace qbern {

json to_json(const Scalar& x) {
  return json{{"exact", x.exact_string()}, {"decimal", x.decimal_string()}};
}

json to_json(const QContext& ctx) {
  return json{{"q", ctx.q().exact_string()},
              {"q_decimal", ctx.q().decimal_string()},
              {"h", ctx.h().exact_string()},
              {"mode", std::string(to_string(ctx.mode()))},
              {"eps", ctx.eps_abs()},
              {"tail_tol", ctx.tail_tol()},
              {"series_max_terms", ctx.series_max_terms()}};
}

json to_json(const BernoulliTable& table) {
  json rows = json::array();
  for (int n = 0; n <= table.max_n(); ++n) {
    json coeffs = json::array();
    for (const auto& c : table.polynomial(n).coefficients()) coeffs.push_back(to_json(c));
    rows.push_back(json{{"n", n}, {"beta", to_json(table.number(n))}, {"coefficients", coeffs}});
  }
  return json{{"max_n", table.max_n()}, {"rows", rows}};
}

json to_json(const EmReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back(json{{"n", t.n},
                         {"bracket", to_json(t.bracket())},
                         {"bracket_b", to_json(t.bracket_b)},
                         {"bracket_a", to_json(t.bracket_a)},
                         {"derivative_b", to_json(t.derivative_b)},
                         {"derivative_a", to_json(t.derivative_a)},
                         {"factor", to_json(t.factor)},
                         {"contribution", to_json(t.contribution)}});
  }
  return json{{"variant", std::string(to_string(r.variant))},
              {"formula", to_json(r.formula)},
              {"oracle", to_json(r.oracle)},
              {"discrepancy", to_json(r.discrepancy)},
              {"integral", to_json(r.integral)},
              {"boundary", to_json(r.boundary)},
              {"terms_used", r.terms_used},
              {"oracle_terms", r.oracle_terms},
              {"limit_b", r.limit_b},
              {"terms", terms}};
}

json to_json(const ApproxReport& r) {
  json coeffs = json::array();
  for (const auto& c : r.coefficients) coeffs.push_back(to_json(c));
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back(json{{"x", to_json(s.x)},
                           {"f", to_json(s.f)},
                           {"approx", to_json(s.approx)},
                           {"error", to_json(s.error())}});
  }
  return json{{"N", r.N},
              {"coefficients", coeffs},
              {"remainder_bound", to_json(r.remainder_bound)},
              {"sup_beta", to_json(r.sup_beta)},
              {"sup_derivative", to_json(r.sup_derivative)},
              {"l2q_error", to_json(r.l2q_error)},
              {"max_sampled_error", to_json(r.max_sampled_error)},
              {"samples", samples}};
}

json envelope(const QContext& ctx, std::string_view command, json results) {
  return json{{"context", to_json(ctx)}, {"command", std::string(command)}, {"results", std::move(results)}};
}

std::string table_csv(const BernoulliTable& table) {
  std::ostringstream out;
  out << "n,beta_exact,beta_decimal";
  for (int k = 0; k <= table.max_n(); ++k) out << ",c" << k << "_exact,c" << k << "_decimal";
  out << '\n';
  for (int n = 0; n <= table.max_n(); ++n) {
    const Scalar& b = table.number(n);
    out << n << ',' << b.exact_string() << ',' << b.decimal_string();
    const Polynomial& row = table.polynomial(n);
    for (int k = 0; k <= table.max_n(); ++k) {
      if (k <= n) {
        Scalar c = row.coefficient(k);
        out << ',' << c.exact_string() << ',' << c.decimal_string();
      } else {
        out << ",,";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string samples_csv(const ApproxReport& r) {
  std::ostringstream out;
  out << "x,f,approx,error,x_exact,f_exact,approx_exact,error_exact\n";
  for (const auto& s : r.samples) {
    Scalar e = s.error();
    out << s.x.decimal_string() << ',' << s.f.decimal_string() << ',' << s.approx.decimal_string() << ','
        << e.decimal_string() << ',' << s.x.exact_string() << ',' << s.f.exact_string() << ','
        << s.approx.exact_string() << ',' << e.exact_string() << '\n';
  }
  return out.str();
}

}  // namespace qbern
