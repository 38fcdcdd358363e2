#include "fslab/fslab.h"

#include <exception>
#include <string>

#include "fslab/bounds.hpp"
#include "fslab/errors.hpp"
#include "fslab/extremal.hpp"
#include "fslab/members.hpp"
#include "fslab/search.hpp"

struct fslab_params {
    fslab::ClassParams value;
};

struct fslab_member {
    fslab::ClassMember value;
};

namespace {

thread_local std::string g_last_error;

fslab_status fail(fslab_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Maps exceptions escaping body() onto status codes.
template <typename F>
fslab_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const fslab::DomainError& e) {
        return fail(FSLAB_ERR_DOMAIN, e.what());
    } catch (const fslab::NearSingular& e) {
        return fail(FSLAB_ERR_NEAR_SINGULAR, e.what());
    } catch (const fslab::CaseRangeError& e) {
        return fail(FSLAB_ERR_CASE_RANGE, e.what());
    } catch (const fslab::ViolationError& e) {
        return fail(FSLAB_ERR_VIOLATION, e.what());
    } catch (const std::exception& e) {
        return fail(FSLAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FSLAB_ERR_INTERNAL, "unknown error");
    }
}

fslab::HerglotzMeasure to_measure(const fslab_atom* atoms, size_t n) {
    std::vector<fslab::Atom> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i)
        out.push_back({atoms[i].weight, atoms[i].angle});
    return fslab::HerglotzMeasure(std::move(out));
}

fslab::SearchBudget to_budget(const fslab_budget* b) {
    fslab::SearchBudget out;
    if (b) {
        out.n_samples = b->n_samples;
        out.n_refine = b->n_refine;
        out.max_atoms = b->max_atoms;
        out.seed = b->seed;
        out.threads = b->threads;
    }
    return out;
}

} // namespace

extern "C" {

const char* fslab_last_error(void) {
    return g_last_error.c_str();
}

const char* fslab_version(void) {
    return "1.0.0";
}

void fslab_budget_default(fslab_budget* out) {
    if (!out)
        return;
    const fslab::SearchBudget d;
    out->n_samples = d.n_samples;
    out->n_refine = d.n_refine;
    out->max_atoms = static_cast<uint32_t>(d.max_atoms);
    out->seed = d.seed;
    out->threads = d.threads;
}

fslab_status fslab_params_create(double lambda, double delta, double alpha, double beta, fslab_params** out) {
    if (!out)
        return fail(FSLAB_ERR_NULL, "out is NULL");
    return guarded([&] {
        *out = new fslab_params{fslab::ClassParams(lambda, delta, alpha, beta)};
        return FSLAB_OK;
    });
}

void fslab_params_destroy(fslab_params* params) {
    delete params;
}

fslab_status fslab_params_get(const fslab_params* params, double* lambda, double* delta, double* alpha,
                              double* beta, double* tau, double* sigma) {
    if (!params)
        return fail(FSLAB_ERR_NULL, "params is NULL");
    const auto& p = params->value;
    if (lambda) *lambda = p.lambda();
    if (delta) *delta = p.delta();
    if (alpha) *alpha = p.alpha();
    if (beta) *beta = p.beta();
    if (tau) *tau = p.tau();
    if (sigma) *sigma = p.sigma();
    return FSLAB_OK;
}

fslab_status fslab_bound_real(const fslab_params* params, double mu, fslab_bound_report* out) {
    if (!params || !out)
        return fail(FSLAB_ERR_NULL, "params or out is NULL");
    return guarded([&] {
        const fslab::BoundReport r = fslab::bound_real(params->value, mu);
        out->mu = r.mu;
        out->case_id = r.case_id;
        out->breakpoints[0] = r.breakpoints.mu1;
        out->breakpoints[1] = r.breakpoints.mu2;
        out->breakpoints[2] = r.breakpoints.mu3;
        out->scaled_value = r.scaled_value;
        out->value = r.value;
        out->psi_beta = r.psi_beta;
        out->psi_alpha = r.psi_alpha;
        out->psi_zero = r.psi_zero;
        return FSLAB_OK;
    });
}

fslab_status fslab_bound_complex(const fslab_params* params, double mu_re, double mu_im, double* value,
                                 double* scaled_value) {
    if (!params || !value)
        return fail(FSLAB_ERR_NULL, "params or value is NULL");
    return guarded([&] {
        const double scaled = fslab::bound_complex_scaled(params->value, {mu_re, mu_im});
        *value = scaled / (3.0 * params->value.sigma());
        if (scaled_value)
            *scaled_value = scaled;
        return FSLAB_OK;
    });
}

fslab_status fslab_coeff_bounds(const fslab_params* params, double* a2_max, double* a3_max) {
    if (!params || !a2_max || !a3_max)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    const auto cb = fslab::coeff_bounds(params->value);
    *a2_max = cb.a2_max;
    *a3_max = cb.a3_max;
    return FSLAB_OK;
}

fslab_status fslab_caratheodory_bound(double nu_re, double nu_im, double* out) {
    if (!out)
        return fail(FSLAB_ERR_NULL, "out is NULL");
    *out = fslab::caratheodory_bound({nu_re, nu_im});
    return FSLAB_OK;
}

fslab_status fslab_starlike_fs_bound(double beta, double mu, double* out) {
    if (!out)
        return fail(FSLAB_ERR_NULL, "out is NULL");
    return guarded([&] {
        *out = fslab::starlike_fs_bound(beta, mu);
        return FSLAB_OK;
    });
}

fslab_status fslab_classical_s_bound(double mu, double* out) {
    if (!out)
        return fail(FSLAB_ERR_NULL, "out is NULL");
    return guarded([&] {
        *out = fslab::classical_s_bound(mu);
        return FSLAB_OK;
    });
}

fslab_status fslab_preset_from_name(const char* name, fslab_preset* out) {
    if (!name || !out)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    const auto preset = fslab::preset_from_name(name);
    if (!preset)
        return fail(FSLAB_ERR_DOMAIN, "unknown preset name");
    *out = static_cast<fslab_preset>(*preset);
    return FSLAB_OK;
}

fslab_status fslab_reduction_bound(fslab_preset preset, double lambda, double alpha, double beta, double mu,
                                   double* out) {
    if (!out)
        return fail(FSLAB_ERR_NULL, "out is NULL");
    if (preset < FSLAB_PRESET_KEOGH_MERKES || preset > FSLAB_PRESET_AD2)
        return fail(FSLAB_ERR_DOMAIN, "unknown preset");
    return guarded([&] {
        *out = fslab::reduction_bound(static_cast<fslab::Preset>(preset), lambda, alpha, beta, mu);
        return FSLAB_OK;
    });
}

fslab_status fslab_member_create(const fslab_params* params, const fslab_atom* p_atoms, size_t n_p,
                                 const fslab_atom* q_atoms, size_t n_q, size_t order, fslab_member** out) {
    if (!params || !out || (n_p && !p_atoms) || (n_q && !q_atoms))
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        auto member = fslab::member_from_pq(params->value, to_measure(p_atoms, n_p), to_measure(q_atoms, n_q), order);
        *out = new fslab_member{std::move(member)};
        return FSLAB_OK;
    });
}

fslab_status fslab_member_extremal(const fslab_params* params, double mu, int case_id, fslab_member** out) {
    if (!params || !out)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        *out = new fslab_member{fslab::extremal_member(params->value, mu, case_id)};
        return FSLAB_OK;
    });
}

void fslab_member_destroy(fslab_member* member) {
    delete member;
}

size_t fslab_member_order(const fslab_member* member) {
    return member ? member->value.order() : 0;
}

fslab_status fslab_member_sequence(const fslab_member* member, fslab_sequence which, double* re, double* im,
                                   size_t len) {
    if (!member || !re || !im)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        const auto& m = member->value;
        std::vector<fslab::cplx> seq;
        switch (which) {
        case FSLAB_SEQ_A: seq = m.a; break;
        case FSLAB_SEQ_B: seq = m.b; break;
        case FSLAB_SEQ_C: seq = m.c; break;
        case FSLAB_SEQ_Q: seq = m.qk; break;
        case FSLAB_SEQ_D: seq.assign(m.d.begin(), m.d.end()); break;
        case FSLAB_SEQ_LIBERA: seq = fslab::libera_transform(m).A; break;
        default: return fail(FSLAB_ERR_DOMAIN, "unknown sequence");
        }
        for (size_t k = 0; k < len && k < seq.size(); ++k) {
            re[k] = seq[k].real();
            im[k] = seq[k].imag();
        }
        return FSLAB_OK;
    });
}

fslab_status fslab_member_atoms(const fslab_member* member, int which, fslab_atom* out, size_t capacity,
                                size_t* count) {
    if (!member || !count || (capacity && !out))
        return fail(FSLAB_ERR_NULL, "NULL argument");
    if (which != 0 && which != 1)
        return fail(FSLAB_ERR_DOMAIN, "which must be 0 (p) or 1 (q)");
    const auto& m = which == 0 ? member->value.p_measure : member->value.q_measure;
    *count = m.size();
    for (size_t i = 0; i < capacity && i < m.size(); ++i)
        out[i] = {m.atoms()[i].weight, m.atoms()[i].angle};
    return FSLAB_OK;
}

fslab_status fslab_member_fs(const fslab_member* member, double mu_re, double mu_im, double* re, double* im) {
    if (!member || !re || !im)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        const auto v = fslab::fs_functional(member->value, {mu_re, mu_im});
        *re = v.real();
        *im = v.imag();
        return FSLAB_OK;
    });
}

fslab_status fslab_member_spotcheck(const fslab_member* member, double radius, size_t grid, int* passed) {
    if (!member || !passed)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        *passed = fslab::membership_spotcheck(member->value, radius, grid) ? 1 : 0;
        return FSLAB_OK;
    });
}

fslab_status fslab_sharpness_check(const fslab_params* params, double mu, fslab_sharpness* out) {
    if (!params || !out)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        const auto r = fslab::sharpness_report(params->value, mu);
        *out = {r.case_id, r.bound, r.attained_value, r.residual};
        return FSLAB_OK;
    });
}

fslab_status fslab_verify(const fslab_params* params, double mu_re, double mu_im, const fslab_budget* budget,
                          fslab_verify_report* out, fslab_member** best) {
    if (!params || !out)
        return fail(FSLAB_ERR_NULL, "NULL argument");
    return guarded([&] {
        auto report = fslab::check_inequality(params->value, {mu_re, mu_im}, to_budget(budget));
        out->mu_re = mu_re;
        out->mu_im = mu_im;
        out->bound = report.bound;
        out->best_value = report.best_value;
        out->margin = report.margin;
        out->attained = report.attained ? 1 : 0;
        out->evaluations = report.evaluations;
        const bool violated = fslab::is_violation(report);
        if (best)
            *best = new fslab_member{std::move(report.best_member)};
        if (violated)
            return fail(FSLAB_ERR_VIOLATION, "sampled member exceeds the bound");
        return FSLAB_OK;
    });
}

} // extern "C"
