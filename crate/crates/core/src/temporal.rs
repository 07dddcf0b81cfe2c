//! Evolution over time: per-year activity series, per-period network reports and
//! growth rates between two periods.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::ingest::PublicationRecord;
use crate::level::Level;
use crate::metrics::{full_report, MetricsError, MetricsOptions, MetricsReport};
use crate::netbuild::{build_graph, BuildConfig, EdgeWeightPolicy, GraphSummary, YearWindow};

#[derive(Debug, thiserror::Error)]
pub enum TemporalError {
    #[error("periods {first:?} and {second:?} overlap; mark the comparison cumulative to allow this")]
    OverlappingPeriods { first: String, second: String },
    #[error("early window {early} and recent window {recent} overlap")]
    OverlappingWindows { early: YearWindow, recent: YearWindow },
    #[error("minimum total must be at least 1")]
    ZeroMinimum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YearRow {
    pub year: i32,
    pub active_nodes: usize,
    pub unique_links: usize,
    pub weight_sum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YearlySeries {
    pub level: Level,
    pub rows: Vec<YearRow>,
}

/// One row per year that has at least one record, each computed on that year's graph.
pub fn yearly_series(records: &[PublicationRecord], level: Level, policy: EdgeWeightPolicy) -> YearlySeries {
    let years: BTreeSet<i32> = records.iter().map(|r| r.year).collect();
    let rows = years
        .into_iter()
        .map(|year| {
            let config = BuildConfig::new(level)
                .window(Some(YearWindow::single(year)))
                .policy(policy);
            let g = build_graph(records, &config);
            YearRow {
                year,
                active_nodes: g.active_node_count(),
                unique_links: g.edge_count(),
                weight_sum: g.total_weight(),
            }
        })
        .collect();
    YearlySeries { level, rows }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Period {
    pub label: String,
    pub window: YearWindow,
}

impl Period {
    pub fn new(label: impl Into<String>, window: YearWindow) -> Self {
        Period {
            label: label.into(),
            window,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodResult {
    pub label: String,
    pub window: YearWindow,
    pub totals: GraphSummary,
    /// `None` when some measure is undefined on this period's graph.
    pub report: Option<MetricsReport>,
    pub undefined: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodComparison {
    pub level: Level,
    pub cumulative: bool,
    pub periods: Vec<PeriodResult>,
}

/// Builds one graph per labelled window and reports on each. Overlapping windows
/// are rejected unless `cumulative` is set.
pub fn period_compare(
    records: &[PublicationRecord],
    level: Level,
    periods: &[Period],
    policy: EdgeWeightPolicy,
    cumulative: bool,
    options: &MetricsOptions,
) -> Result<PeriodComparison, TemporalError> {
    if !cumulative {
        for (i, a) in periods.iter().enumerate() {
            for b in &periods[i + 1..] {
                if a.window.overlaps(&b.window) {
                    return Err(TemporalError::OverlappingPeriods {
                        first: a.label.clone(),
                        second: b.label.clone(),
                    });
                }
            }
        }
    }
    let results = periods
        .iter()
        .map(|p| {
            let g = build_graph(records, &BuildConfig::new(level).window(Some(p.window)).policy(policy));
            let (report, undefined) = match full_report(&g, options) {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e.to_string())),
            };
            PeriodResult {
                label: p.label.clone(),
                window: p.window,
                totals: g.summary(),
                report,
                undefined,
            }
        })
        .collect();
    Ok(PeriodComparison {
        level,
        cumulative,
        periods: results,
    })
}

/// Full-corpus report on the window spanning every record year.
pub fn all_time_report(
    records: &[PublicationRecord],
    level: Level,
    policy: EdgeWeightPolicy,
    options: &MetricsOptions,
) -> Result<MetricsReport, MetricsError> {
    let g = build_graph(records, &BuildConfig::new(level).policy(policy));
    full_report(&g, options)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthRow {
    pub entity: String,
    pub growth: f64,
    pub av_recent: f64,
    pub av_early: f64,
}

impl GrowthRow {
    /// `None` unless both averages are positive.
    pub fn new(entity: impl Into<String>, av_recent: f64, av_early: f64) -> Option<Self> {
        if av_early <= 0.0 || av_recent <= 0.0 {
            return None;
        }
        Some(GrowthRow {
            entity: entity.into(),
            growth: av_recent / av_early,
            av_recent,
            av_early,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthTable {
    pub early: YearWindow,
    pub recent: YearWindow,
    /// Sorted by growth descending, then entity name.
    pub rows: Vec<GrowthRow>,
    /// Active in the recent window only; no growth value is assigned.
    pub new_entrants: Vec<String>,
    /// Active in both windows but below the minimum total.
    pub below_minimum: Vec<String>,
}

fn collaborations(
    records: &[PublicationRecord],
    level: Level,
    window: YearWindow,
    policy: EdgeWeightPolicy,
) -> BTreeMap<String, u64> {
    let g = build_graph(records, &BuildConfig::new(level).window(Some(window)).policy(policy));
    g.degrees()
        .into_iter()
        .filter(|(_, (_, w))| *w > 0)
        .map(|(n, (_, w))| (n.to_owned(), w))
        .collect()
}

/// Ratio of mean collaborations per year (incident edge weight over the inclusive
/// year span) between `recent` and `early`.
pub fn growth_rates(
    records: &[PublicationRecord],
    level: Level,
    early: YearWindow,
    recent: YearWindow,
    policy: EdgeWeightPolicy,
    min_total: u64,
) -> Result<GrowthTable, TemporalError> {
    if min_total == 0 {
        return Err(TemporalError::ZeroMinimum);
    }
    if early.overlaps(&recent) {
        return Err(TemporalError::OverlappingWindows { early, recent });
    }
    let early_counts = collaborations(records, level, early, policy);
    let recent_counts = collaborations(records, level, recent, policy);

    let mut table = GrowthTable {
        early,
        recent,
        rows: Vec::new(),
        new_entrants: Vec::new(),
        below_minimum: Vec::new(),
    };
    for (entity, &recent_total) in &recent_counts {
        let Some(&early_total) = early_counts.get(entity) else {
            table.new_entrants.push(entity.clone());
            continue;
        };
        if early_total + recent_total < min_total {
            table.below_minimum.push(entity.clone());
            continue;
        }
        let av_recent = recent_total as f64 / recent.span() as f64;
        let av_early = early_total as f64 / early.span() as f64;
        if let Some(row) = GrowthRow::new(entity.clone(), av_recent, av_early) {
            table.rows.push(row);
        }
    }
    table
        .rows
        .sort_by(|a, b| b.growth.total_cmp(&a.growth).then_with(|| a.entity.cmp(&b.entity)));
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{Affiliation, AuthorEntry};

    fn country_pair(id: &str, year: i32, a: &str, b: &str) -> PublicationRecord {
        PublicationRecord {
            id: id.into(),
            title: String::new(),
            year,
            journal: String::new(),
            authors: vec![
                AuthorEntry::new("x", vec![Affiliation::new(None, Some(a))]),
                AuthorEntry::new("y", vec![Affiliation::new(None, Some(b))]),
            ],
            keywords: vec![],
        }
    }

    #[test]
    fn first_collaboration_year() {
        let s = yearly_series(
            &[country_pair("p", 1972, "United States", "China")],
            Level::Country,
            EdgeWeightPolicy::PerPublication,
        );
        assert_eq!(
            s.rows,
            vec![YearRow {
                year: 1972,
                active_nodes: 2,
                unique_links: 1,
                weight_sum: 1
            }]
        );
    }

    #[test]
    fn repeated_pair_accumulates_weight() {
        let recs = [country_pair("a", 2000, "A", "B"), country_pair("b", 2000, "B", "A")];
        let s = yearly_series(&recs, Level::Country, EdgeWeightPolicy::PerPublication);
        assert_eq!(
            (s.rows[0].active_nodes, s.rows[0].unique_links, s.rows[0].weight_sum),
            (2, 1, 2)
        );
    }

    #[test]
    fn growth_hand_arithmetic() {
        // entity E: 3 collaborations over 2000-2002, 12 over 2003-2006
        let mut recs = Vec::new();
        for (i, y) in [2000, 2001, 2002].iter().enumerate() {
            recs.push(country_pair(&format!("e{i}"), *y, "E", "F"));
        }
        for i in 0..12 {
            recs.push(country_pair(&format!("r{i}"), 2003 + (i % 4), "E", "F"));
        }
        let t = growth_rates(
            &recs,
            Level::Country,
            YearWindow::new(2000, 2002).unwrap(),
            YearWindow::new(2003, 2006).unwrap(),
            EdgeWeightPolicy::PerPublication,
            1,
        )
        .unwrap();
        let e = t.rows.iter().find(|r| r.entity == "E").unwrap();
        assert_eq!(e.growth, 3.0);
        assert_eq!((e.av_recent, e.av_early), (3.0, 1.0));
    }

    #[test]
    fn growth_excludes_new_entrants() {
        let recs = [country_pair("a", 2000, "A", "B"), country_pair("b", 2005, "A", "C")];
        let t = growth_rates(
            &recs,
            Level::Country,
            YearWindow::single(2000),
            YearWindow::single(2005),
            EdgeWeightPolicy::PerPublication,
            1,
        )
        .unwrap();
        assert_eq!(t.new_entrants, vec!["C".to_owned()]);
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].entity, "A");
    }

    #[test]
    fn growth_rejects_bad_arguments() {
        let w = YearWindow::new(2000, 2005).unwrap();
        assert!(growth_rates(
            &[],
            Level::Country,
            w,
            YearWindow::new(2005, 2006).unwrap(),
            EdgeWeightPolicy::PerPublication,
            1
        )
        .is_err());
        assert!(growth_rates(
            &[],
            Level::Country,
            w,
            YearWindow::single(2006),
            EdgeWeightPolicy::PerPublication,
            0
        )
        .is_err());
    }

    #[test]
    fn rounded_display_values() {
        let row = GrowthRow::new("France", 7.4, 0.2).unwrap();
        assert!((row.growth - 37.0).abs() < 1e-9);
        assert!(GrowthRow::new("X", 1.0, 0.0).is_none());
    }

    #[test]
    fn overlapping_periods() {
        let recs = [country_pair("a", 2000, "A", "B")];
        let periods = [
            Period::new("one", YearWindow::new(1990, 2000).unwrap()),
            Period::new("two", YearWindow::new(2000, 2010).unwrap()),
        ];
        let opts = MetricsOptions::default();
        assert!(period_compare(
            &recs,
            Level::Country,
            &periods,
            EdgeWeightPolicy::PerPublication,
            false,
            &opts
        )
        .is_err());
        let cmp = period_compare(
            &recs,
            Level::Country,
            &periods,
            EdgeWeightPolicy::PerPublication,
            true,
            &opts,
        )
        .unwrap();
        assert_eq!(cmp.periods.len(), 2);
        // two nodes are too few for a report
        assert!(cmp.periods[0].report.is_none());
        assert!(cmp.periods[0].undefined.is_some());
    }

    #[test]
    fn empty_period_totals() {
        let recs = [country_pair("a", 2000, "A", "B")];
        let periods = [Period::new("empty", YearWindow::new(1900, 1950).unwrap())];
        let cmp = period_compare(
            &recs,
            Level::Country,
            &periods,
            EdgeWeightPolicy::PerPublication,
            false,
            &MetricsOptions::default(),
        )
        .unwrap();
        let p = &cmp.periods[0];
        assert_eq!((p.totals.nodes, p.totals.edges, p.totals.total_weight), (0, 0, 0));
        assert!(p.report.is_none());
    }
}
