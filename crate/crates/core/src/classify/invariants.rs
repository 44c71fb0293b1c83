use num_traits::ToPrimitive;

use crate::classify::Analysis;
use crate::scalar::Real;

impl<T: Real> Analysis<T> {
    /// Checks the implications between the regularity notions and the
    /// structural identities of the spectrum and the predistance system.
    /// Returns one message per violated statement.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut fail = |msg: String| out.push(msg);
        let tol = self.tolerances.mat;
        let diameter = self.diameter();
        let d = self.d();
        let n = self.spectrum.order();
        let delta = self.graph.degree();
        let bip = self.distances.is_bipartite();
        let lambda = |i: usize| self.spectrum.eigenvalue(i).f64();
        let mult = |i: usize| self.spectrum.multiplicity(i) as f64;

        let pdr: Vec<bool> = (0..=diameter).map(|h| self.punctually_distance_regular(h).unwrap()).collect();
        let pdp: Vec<bool> = (0..=diameter)
            .map(|h| self.punctually_distance_polynomial(h).unwrap().holds)
            .collect();
        let pwr: Vec<bool> = (0..=diameter)
            .map(|h| self.punctually_walk_regular(h).unwrap().walks)
            .collect();
        let psr: Vec<bool> = (0..=diameter)
            .map(|h| self.punctually_walk_regular(h).unwrap().spectral)
            .collect();
        let m_pdr = self.intersection.partial_regularity();
        let m_wr = self.walk_regular_m().combinatorial;
        let dr = self.intersection.all_well_defined();
        let lm = |l: usize, m: usize| self.lm_walk_regular(l, m).map(|x| x.combinatorial).unwrap_or(false);
        let c_wd = |k: usize| self.intersection.c(k).is_well_defined();
        let a_wd = |k: usize| self.intersection.a(k).is_well_defined();
        let b_wd = |k: usize| k < diameter && self.intersection.b(k).is_well_defined();

        // Spectrum.
        if self.spectrum.multiplicity(0) != 1 || lambda(0) != delta as f64 {
            fail("lambda_0 = delta with multiplicity 1".into());
        }
        if self.spectrum.multiplicities().iter().sum::<usize>() != n {
            fail("multiplicities sum to n".into());
        }
        let residuals = self.spectrum.identity_residuals(&self.graph, n <= 64);
        if residuals.worst() > tol {
            fail(format!("idempotent identities: residual {:.3e}", residuals.worst()));
        }
        for l in 0..=d {
            let exact = self.walks.trace(l).to_f64().unwrap();
            let spectral: f64 = (0..=d).map(|i| mult(i) * lambda(i).powi(l as i32)).sum();
            if (exact - spectral).abs() > tol * (lambda(0).powi(l as i32)).max(1.0) * n as f64 {
                fail(format!("trace A^{l} = {exact} but spectral sum = {spectral}"));
            }
        }
        for u in 0..n {
            let s: f64 = (0..=d).map(|i| self.multiplicities.local(u, i).f64()).sum();
            if (s - 1.0).abs() > tol {
                fail(format!("local multiplicities of vertex {u} sum to {s}"));
                break;
            }
        }
        if pwr[0] != psr[0] {
            fail("walk-regularity and spectrum-regularity differ".into());
        }
        if bip != self.spectrum.is_symmetric_about_zero(tol) {
            fail("spectral symmetry does not match bipartiteness".into());
        }

        // Predistance polynomials.
        let ps = &self.predistance;
        let (off, diag) = ps.orthogonality_residuals();
        if off > tol || diag > tol {
            fail(format!("orthogonality residuals {off:.3e} / {diag:.3e}"));
        }
        if ps.recurrence_residual() > tol {
            fail(format!("recurrence residual {:.3e}", ps.recurrence_residual()));
        }
        if ps.row_sum_residual() > tol * lambda(0).max(1.0) {
            fail(format!("alpha + beta + gamma = lambda_0 residual {:.3e}", ps.row_sum_residual()));
        }
        let omega_d = n as f64 / self.spectrum.pi(0).f64();
        if ((ps.omega(d).f64() - omega_d) / omega_d).abs() > tol {
            fail("omega_d = n / pi_0".into());
        }
        let h_values = ps.hoffman_values();
        if (h_values[0].f64() - n as f64).abs() > tol * n as f64
            || h_values[1..].iter().any(|x| x.f64().abs() > tol * n as f64)
        {
            fail("Hoffman polynomial values".into());
        }
        for i in 0..=d {
            if ps.at_lambda0(i).f64() <= 0.0 {
                fail(format!("p_{i}(lambda_0) <= 0"));
            }
            if (ps.xi(1, i, i).f64() - ps.alpha()[i].f64()).abs() > tol * lambda(0) {
                fail(format!("xi_1{i}^{i} != alpha_{i}"));
            }
            if i < d && (ps.xi(1, i + 1, i).f64() - ps.beta()[i].f64()).abs() > tol * lambda(0) {
                fail(format!("xi_1{}^{i} != beta_{i}", i + 1));
            }
            if i >= 1 && (ps.xi(1, i - 1, i).f64() - ps.gamma(i).f64()).abs() > tol * lambda(0) {
                fail(format!("xi_1{}^{i} != gamma_{i}", i - 1));
            }
        }
        if bip {
            if ps.alpha().iter().any(|a| a.f64().abs() > tol) {
                fail("bipartite: alpha_i = 0".into());
            }
            if (ps.gamma(d).f64() - delta as f64).abs() > tol {
                fail("bipartite: gamma_d = delta".into());
            }
            for i in 0..=d {
                for j in 0..=d {
                    if (ps.value(i, j) - ps.value(i, d - j) * if i % 2 == 0 { T::one() } else { -T::one() })
                        .abs()
                        .f64()
                        > tol * ps.at_lambda0(i).f64().max(1.0)
                    {
                        fail(format!("bipartite: p_{i} has the parity of {i}"));
                    }
                }
            }
            if d >= 2 && ps.xi(1, 1, 1).f64().abs() > tol {
                fail("bipartite: xi_11^1 = 0".into());
            }
        }
        if dr {
            for h in 0..=diameter {
                let want = self.distances.average_degree_f64(h);
                if (ps.at_lambda0(h).f64() - want).abs() > tol * want.max(1.0) {
                    fail(format!("distance-regular: p_{h}(lambda_0) != delta_{h}"));
                }
            }
        }

        // Punctual notions.
        if !(pdr[0] && pdr[1]) {
            fail("0- and 1-punctual distance-regularity".into());
        }
        for h in 0..=diameter {
            if pdr[h] && !pdp[h] {
                fail(format!("h={h}: punctually DR but not DP"));
            }
            if diameter == d && pdr[h] != pdp[h] {
                fail(format!("h={h}: D = d but DR and DP differ"));
            }
            if self.predistance_in_distance_algebra(h) && !pdr[h] {
                fail(format!("h={h}: p_h(A) in the distance algebra but not punctually DR"));
            }
            if pwr[h] != psr[h] {
                fail(format!("h={h}: punctual walk- and spectrum-regularity differ"));
            }
            if let Ok(dp) = self.punctually_distance_polynomial(h) {
                if dp.holds {
                    let want = self.distances.average_degree_f64(h);
                    if (dp.degree.unwrap() - want).abs() > tol * want.max(1.0) || !dp.distance_graph_regular {
                        fail(format!("h={h}: distance-polynomial but the distance-h graph is not q_h(lambda_0)-regular"));
                    }
                    // With spectrum-regularity at h and (z-1, 0)-walk-regularity
                    // (z zeros of q_h on the spectrum), the graph is walk-regular.
                    let q = self.q_values(h);
                    let scale = q[0].f64().abs().max(1.0);
                    let zeros = q.iter().filter(|x| x.f64().abs() <= tol * scale).count();
                    if psr[h] && zeros >= 1 && self.frontier_ell(0).is_some_and(|l| l + 1 >= zeros) && !pwr[0] {
                        fail(format!("h={h}: hypotheses for walk-regularity hold but the graph is not walk-regular"));
                    }
                }
            }
        }
        let all_dp = |upto: usize| (0..=upto).all(|h| pdp[h]);
        let all_dr = |upto: usize| (0..=upto).all(|h| pdr[h]);
        if diameter >= 1 && all_dp(diameter - 1) && !all_dp(diameter) {
            fail("(D-1)-partially DP but not distance-polynomial".into());
        }
        if d >= 1 && d - 1 <= diameter && all_dr(d - 1) && !dr {
            fail("(d-1)-partially DR but not distance-regular".into());
        }
        if bip {
            if diameter >= 2 && all_dp(diameter - 2) && !all_dp(diameter) {
                fail("bipartite: (D-2)-partially DP but not distance-polynomial".into());
            }
            if d >= 2 && d - 2 <= diameter && all_dr(d - 2) && !dr {
                fail("bipartite: (d-2)-partially DR but not distance-regular".into());
            }
        }
        for m in d.div_ceil(2)..=diameter {
            let lo = (2 * m).saturating_sub(d);
            if all_dr(m) != (lo..=m).all(|h| pdr[h]) {
                fail(format!("m={m}: partial DR is not equivalent to punctual DR on {lo}..{m}"));
            }
        }
        if diameter == d {
            if dr != pdr[diameter] {
                fail("D = d: distance-regular iff D-punctually DR".into());
            }
            if diameter >= 2 && dr != (pdr[diameter - 1] && pdr[diameter - 2]) {
                fail("D = d: distance-regular iff (D-1)- and (D-2)-punctually DR".into());
            }
            let pi0_n = self.spectrum.pi(0).f64() / n as f64;
            match self.walks.constant(d, d) {
                Some(a) if pwr[d] => {
                    let a = a.to_f64().unwrap();
                    let gammas: f64 = ps.gammas().iter().map(|g| g.f64()).product();
                    if (a - pi0_n).abs() > tol * pi0_n.max(1.0) || (gammas - pi0_n).abs() > tol * pi0_n.max(1.0) {
                        fail(format!("D = d: a_d^(d) = {a}, pi_0/n = {pi0_n}, gamma product = {gammas}"));
                    }
                }
                _ => fail("D = d: not d-punctually walk-regular".into()),
            }
            for i in 0..=d {
                let want = self.spectrum.phi_sign(i).f64() * self.spectrum.pi_ratio(0, i).f64() / n as f64;
                if (self.multiplicities.average(d, i).f64() - want).abs() > tol {
                    fail(format!("D = d: m_d{i} != (-1)^i pi_0 / (n pi_{i})"));
                }
            }
            if bip && d >= 1 {
                let want_a = pi0_n / delta as f64;
                match self.walks.constant(d - 1, d - 1) {
                    Some(a) if pwr[d - 1] => {
                        if (a.to_f64().unwrap() - want_a).abs() > tol * want_a.max(1.0) {
                            fail("bipartite D = d: a_{d-1}^(d-1) = pi_0 / (n delta)".into());
                        }
                    }
                    _ => fail("bipartite D = d: not (d-1)-punctually walk-regular".into()),
                }
                for i in 0..=d {
                    let want = self.spectrum.phi_sign(i).f64() * self.spectrum.pi_ratio(0, i).f64() / n as f64
                        * lambda(i)
                        / delta as f64;
                    if (self.multiplicities.average(d - 1, i).f64() - want).abs() > tol {
                        fail(format!("bipartite D = d: m_(d-1){i} formula"));
                    }
                }
            }
        }

        // Walk-regularity.
        if diameter >= 1 && pwr[1] {
            if !pwr[0] {
                fail("1-punctually WR but not walk-regular".into());
            } else {
                for l in 1..=d {
                    let a0 = self.walks.constant(0, l).and_then(|x| x.to_f64());
                    let a1 = self.walks.constant(1, l - 1).and_then(|x| x.to_f64());
                    if let (Some(a0), Some(a1)) = (a0, a1) {
                        if a0 != delta as f64 * a1 {
                            fail(format!("1-punctually WR: a_0^({l}) != delta a_1^({})", l - 1));
                        }
                    }
                }
                for i in 0..=d {
                    let want = lambda(i) / lambda(0) * mult(i) / n as f64;
                    if (self.multiplicities.average(1, i).f64() - want).abs() > tol {
                        fail(format!("1-punctually WR: m_1{i} formula"));
                    }
                }
            }
        }
        if let Some(m) = m_wr {
            if m_pdr < m {
                fail(format!("{m}-walk-regular but only {m_pdr}-partially DR"));
            }
            if !a_wd(m) {
                fail(format!("{m}-walk-regular but a_{m} not well defined"));
            } else if let Some(am) = self.intersection.a(m).value() {
                if (f64::from(am) - ps.alpha()[m].f64()).abs() > tol * lambda(0) {
                    fail(format!("{m}-walk-regular: a_{m} != alpha_{m}"));
                }
            }
        }
        let weak = (0..=diameter)
            .take_while(|&m| {
                self.walks.constancy(m, m).is_constant()
                    && (0..m).all(|h| {
                        self.walks.constancy(h, h).is_constant()
                            && (h + 1 > d || self.walks.constancy(h, h + 1).is_constant())
                    })
            })
            .last()
            .unwrap_or(0);
        if m_pdr < weak {
            fail(format!("weak walk condition up to {weak} but only {m_pdr}-partially DR"));
        }
        if let Some(g) = self.distances.girth() {
            if m_pdr < (g - 1) / 2 {
                fail(format!("girth {g} but only {m_pdr}-partially DR"));
            }
        }

        // (l, m)-walk-regularity.
        for m in 1..=diameter {
            if let (Some(l), prev) = (self.frontier_ell(m), self.frontier_ell(m - 1)) {
                if prev.is_none_or(|p| p < (l + 1).min(d)) {
                    fail(format!("({l},{m})-WR but not ({},{})-WR", (l + 1).min(d), m - 1));
                }
            }
            if m < d && lm(m, m) != (lm(m + 1, m - 1) && c_wd(m)) {
                fail(format!("(m,m)-WR iff (m+1,m-1)-WR and c_m well defined fails at m={m}"));
            }
            if m < diameter && m + 2 <= d && lm(m + 1, m) != (lm(m + 2, m - 1) && c_wd(m) && a_wd(m) && b_wd(m)) {
                fail(format!("(m+1,m)-WR iff (m+2,m-1)-WR and c_m, a_m, b_m well defined fails at m={m}"));
            }
        }
        for m in 0..=diameter {
            if (lm(m, m)) != all_dr(m) && m <= d {
                fail(format!("(m,m)-WR iff m-partially DR fails at m={m}"));
            }
        }
        if d >= 2 && self.frontier_ell(0).is_none_or(|l| l < 2) {
            fail("every regular graph is (2,0)-walk-regular".into());
        }
        let mwr = m_wr.map_or(-1i64, |m| m as i64);
        let m = m_pdr as i64;
        let di = d as i64;
        let clamp = |k: i64| k.min(diameter as i64);
        if 2 * m >= di - 1 && mwr < clamp(2 * m + 1 - di) {
            fail(format!("{m}-partially DR implies {}-walk-regular", 2 * m + 1 - di));
        }
        if 2 * m >= di - 2 && a_wd(m_pdr) && mwr < clamp(2 * m + 2 - di) {
            fail(format!("{m}-partially DR with a_m implies {}-walk-regular", 2 * m + 2 - di));
        }
        if bip && 2 * m >= di - 3 && mwr < clamp(2 * m + 3 - di) {
            fail(format!("bipartite {m}-partially DR implies {}-walk-regular", 2 * m + 3 - di));
        }
        if dr {
            if m_wr != Some(diameter) || m_pdr != diameter {
                fail("distance-regular but m_wr or m_pdr below D".into());
            }
            if !self.lm_frontier().contains(&(d, diameter)) {
                fail("distance-regular but (d, D) not in the frontier".into());
            }
        }
        out
    }
}
