use crate::linkage::{Evidence, Ternary};

#[derive(Clone, Debug)]
pub struct ChartReport {
    pub chart: String,
    pub outcome: Ternary,
    pub summary: String,
    pub evidence: Vec<Evidence>,
}

#[derive(Clone, Debug)]
pub struct SheafReport {
    pub overall: Ternary,
    pub charts: Vec<ChartReport>,
    /// Glueing and compatibility checks.
    pub checks: Vec<Evidence>,
    pub rank: Option<usize>,
    pub co_rank: Option<(usize, usize)>,
}

impl SheafReport {
    /// Yes only if every chart and every check is affirmative; No if any is
    /// negative.
    pub(crate) fn assemble(charts: Vec<ChartReport>, checks: Vec<Evidence>) -> Self {
        let outcomes =
            charts.iter().map(|c| c.outcome).chain(checks.iter().filter(|e| !e.informational).map(|e| e.outcome));
        let mut overall = Ternary::Yes;
        for o in outcomes {
            match o {
                Ternary::No => {
                    overall = Ternary::No;
                    break;
                }
                Ternary::Inconclusive => overall = Ternary::Inconclusive,
                Ternary::Yes => {}
            }
        }
        SheafReport { overall, charts, checks, rank: None, co_rank: None }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Evidence> {
        self.checks.iter().filter(|e| e.outcome != Ternary::Yes)
    }
}
