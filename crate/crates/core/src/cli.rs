//! Command-line front end. Exit codes: 0 success, 1 invalid input,
//! 2 usage error, 3 a verification found a mismatch.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bijections::{
    cut_and_close_surgical, face_cut_maps, face_sew_maps, slit_and_sew_surgical, EdgeMarkedMap,
    FaceMarkedLhs, FaceMarkedRhs, VertexMarked, VertexMarkedPair,
};
use crate::identities::{derivation, verify, CountTable, Identity};
use crate::io::{parse_marked_maps, parse_trees, Marks};
use crate::map::{DegreeDistribution, PlanarMap};
use crate::schaeffer::{closure, opening};
use crate::trees::Sign;
use crate::Count;

#[derive(Parser, Debug)]
#[command(name = "slitsew", version, about = "Bijections on rooted planar bipartite maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Which {
    Schaeffer,
    Vertex,
    Face,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum IdentityArg {
    Vertex,
    Face,
    Origin,
    Derivation,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Io {
    /// Input file, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Output file, `-` for stdout.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Range {
    /// Single distribution, comma separated `d1,d2,...`.
    #[arg(long, value_parser = parse_dist)]
    pub dist: Option<DegreeDistribution>,
    #[arg(long, default_value_t = 5)]
    pub max_edges: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of rooted bipartite maps per distribution.
    Count {
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        io: Io,
    },
    /// Check a counting identity exactly.
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        io: Io,
    },
    /// Run a bijection over every object and check it is inverted.
    Sweep {
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        io: Io,
    },
    /// Eulerian maps to balanced trees.
    Open {
        #[command(flatten)]
        io: Io,
    },
    /// Balanced trees to eulerian maps.
    Close {
        #[command(flatten)]
        io: Io,
    },
    /// Dual of each map, with the same half-edge ids.
    Dual {
        #[command(flatten)]
        io: Io,
    },
    /// Two maps with a marked vertex each to one map with a marked edge.
    SlitSew {
        #[command(flatten)]
        io: Io,
        /// Marked vertex of each map, by a half-edge leaving it.
        #[arg(long)]
        mark_vertex: Vec<usize>,
    },
    /// Inverse of slit-sew.
    CutClose {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        mark_edge: Option<usize>,
        /// Half-edge giving the orientation of the marked edge.
        #[arg(long)]
        orient: Option<usize>,
        #[arg(long)]
        sign: Option<Sign>,
    },
    /// A map with a marked edge and a map with two marked vertices to one
    /// map with two marked edges.
    FaceSew {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        mark_edge: Option<usize>,
        #[arg(long)]
        mark_vertex: Vec<usize>,
    },
    /// Inverse of face-sew.
    FaceCut {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        mark_edge: Vec<usize>,
    },
    /// Canonical code of each map, in hex.
    Code {
        #[command(flatten)]
        io: Io,
    },
}

fn parse_dist(s: &str) -> Result<DegreeDistribution, String> {
    let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    let d = DegreeDistribution::new(parts.map_err(|e| format!("bad distribution {s:?}: {e}"))?);
    if d.is_zero() {
        return Err("empty distribution".into());
    }
    Ok(d)
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

fn read_input(io: &Io) -> Result<String, Failure> {
    let mut text = String::new();
    if io.input.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(invalid)?;
    } else {
        text = std::fs::read_to_string(&io.input).map_err(|e| invalid(format!("{}: {e}", io.input.display())))?;
    }
    Ok(text)
}

fn write_output(io: &Io, text: &str) -> Result<(), Failure> {
    if io.out.as_os_str() == "-" {
        std::io::stdout().write_all(text.as_bytes()).map_err(invalid)
    } else {
        std::fs::write(&io.out, text).map_err(|e| invalid(format!("{}: {e}", io.out.display())))
    }
}

fn distributions(range: &Range) -> Vec<DegreeDistribution> {
    match &range.dist {
        Some(d) => vec![d.clone()],
        None => (1..=range.max_edges).flat_map(DegreeDistribution::with_edges).collect(),
    }
}

fn table_for(dists: &[DegreeDistribution]) -> CountTable<Count> {
    CountTable::generate(dists.iter().map(DegreeDistribution::edges).max().unwrap_or(0))
}

/// Read maps with marks, expecting exactly `count` records.
fn marked_maps(io: &Io, count: usize) -> Result<Vec<(PlanarMap, Marks)>, Failure> {
    let maps = parse_marked_maps(&read_input(io)?).map_err(invalid)?;
    if maps.len() != count {
        return Err(invalid(format!("expected {count} map(s), found {}", maps.len())));
    }
    Ok(maps)
}

/// Flag values if given, else values of `key` from the record marks.
fn marks_or(flags: &[usize], marks: &Marks, key: &str) -> Result<Vec<usize>, Failure> {
    if !flags.is_empty() {
        return Ok(flags.to_vec());
    }
    marks.all(key).into_iter().map(|v| v.parse().map_err(|_| invalid(format!("bad {key} mark {v:?}")))).collect()
}

fn dart_in(map: &PlanarMap, h: usize) -> Result<usize, Failure> {
    if h < map.half_edge_count() {
        Ok(h)
    } else {
        Err(invalid(format!("half-edge {h} does not exist")))
    }
}

fn edge_in(map: &PlanarMap, e: usize) -> Result<usize, Failure> {
    if e < map.edge_count() {
        Ok(2 * e)
    } else {
        Err(invalid(format!("edge {e} does not exist")))
    }
}

fn one<T: Copy>(v: &[T], what: &str) -> Result<T, Failure> {
    match v {
        [x] => Ok(*x),
        _ => Err(usage(format!("expected exactly one {what}, found {}", v.len()))),
    }
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { range, io } => {
            let dists = distributions(&range);
            let table = table_for(&dists);
            let mut out = String::new();
            for d in &dists {
                if range.dist.is_some() {
                    writeln!(out, "B={}", table.get(d)).unwrap();
                } else {
                    writeln!(out, "d={d} B={}", table.get(d)).unwrap();
                }
            }
            write_output(&io, &out)
        }
        Command::Verify { identity, range, io } => {
            let dists = distributions(&range);
            let table = table_for(&dists);
            let mut out = String::new();
            let mut all = true;
            for d in &dists {
                let which = match identity {
                    IdentityArg::Vertex => Identity::Vertex,
                    IdentityArg::Face => Identity::Face,
                    IdentityArg::Origin => Identity::Origin,
                    IdentityArg::Derivation => {
                        for step in derivation(&table, d) {
                            all &= step.ok();
                            writeln!(out, "d={d} step={:?} lhs={} rhs={} ok={}", step.name, step.lhs, step.rhs, step.ok()).unwrap();
                        }
                        continue;
                    }
                };
                let r = verify(&table, d, which);
                all &= r.ok();
                writeln!(out, "{r}").unwrap();
            }
            write_output(&io, &out)?;
            if all { Ok(()) } else { Err(Failure { code: 3, message: "identity mismatch".into() }) }
        }
        Command::Sweep { which, range, io } => {
            let mut out = String::new();
            let mut all = true;
            for d in distributions(&range) {
                let (objects, ok) = crate::sweep::sweep(which.into(), &d).map_err(invalid)?;
                all &= ok;
                writeln!(out, "d={d} objects={objects} ok={ok}").unwrap();
            }
            write_output(&io, &out)?;
            if all { Ok(()) } else { Err(Failure { code: 3, message: "bijection mismatch".into() }) }
        }
        Command::Open { io } => {
            let mut out = Vec::new();
            for (map, _) in parse_marked_maps(&read_input(&io)?).map_err(invalid)? {
                out.push(opening(&map).map_err(invalid)?.0.to_string());
            }
            write_output(&io, &join(out))
        }
        Command::Close { io } => {
            let mut out = Vec::new();
            for tree in parse_trees(&read_input(&io)?).map_err(invalid)? {
                out.push(closure(&tree).map_err(invalid)?.0.to_string());
            }
            write_output(&io, &join(out))
        }
        Command::Dual { io } => {
            let maps = parse_marked_maps(&read_input(&io)?).map_err(invalid)?;
            write_output(&io, &join(maps.iter().map(|(m, _)| m.dual().to_string()).collect()))
        }
        Command::Code { io } => {
            let maps = parse_marked_maps(&read_input(&io)?).map_err(invalid)?;
            let codes = maps.iter().map(|(m, _)| m.canonical_code().iter().map(|b| format!("{b:02x}")).collect::<String>());
            write_output(&io, &(codes.collect::<Vec<_>>().join("\n") + "\n"))
        }
        Command::SlitSew { io, mark_vertex } => {
            let maps = marked_maps(&io, 2)?;
            let marks: Vec<usize> = if mark_vertex.is_empty() {
                let a = one(&marks_or(&[], &maps[0].1, "vertex")?, "vertex mark on the first map")?;
                let b = one(&marks_or(&[], &maps[1].1, "vertex")?, "vertex mark on the second map")?;
                vec![a, b]
            } else if mark_vertex.len() == 2 {
                mark_vertex
            } else {
                return Err(usage("--mark-vertex must be given twice"));
            };
            let first = VertexMarked::new(&maps[0].0, dart_in(&maps[0].0, marks[0])?);
            let second = VertexMarked::new(&maps[1].0, dart_in(&maps[1].0, marks[1])?);
            let (m, _) = slit_and_sew_surgical(&VertexMarkedPair { first, second }).map_err(invalid)?;
            write_output(&io, &format!("{m}\n"))
        }
        Command::CutClose { io, mark_edge, orient, sign } => {
            let maps = marked_maps(&io, 1)?;
            let (map, marks) = &maps[0];
            let orient = match orient.or_else(|| marks.get("orient").and_then(|v| v.parse().ok())) {
                Some(h) => dart_in(map, h)?,
                None => match mark_edge.or_else(|| marks.get("edge").and_then(|v| v.parse().ok())) {
                    Some(e) => edge_in(map, e)?,
                    None => return Err(usage("give --mark-edge or --orient")),
                },
            };
            if let Some(e) = mark_edge {
                if edge_in(map, e)? != orient & !1 {
                    return Err(invalid(format!("half-edge {orient} is not on edge {e}")));
                }
            }
            let sign = match sign {
                Some(s) => s,
                None => marks.get("sign").ok_or_else(|| usage("give --sign"))?.parse().map_err(invalid)?,
            };
            let m = EdgeMarkedMap::new(map, orient, sign);
            let pair = cut_and_close_surgical(&m).map_err(invalid)?;
            write_output(&io, &format!("{pair}\n"))
        }
        Command::FaceSew { io, mark_edge, mark_vertex } => {
            let maps = marked_maps(&io, 2)?;
            let e = match mark_edge {
                Some(e) => e,
                None => one(&marks_or(&[], &maps[0].1, "edge")?, "edge mark on the first map")?,
            };
            let vs = marks_or(&mark_vertex, &maps[1].1, "vertex")?;
            if vs.len() != 2 {
                return Err(usage("the second map needs two marked vertices"));
            }
            let (m1, m2) = (&maps[0].0, &maps[1].0);
            let rhs = FaceMarkedRhs::new(m1, edge_in(m1, e)?, m2, dart_in(m2, vs[0])?, dart_in(m2, vs[1])?);
            let lhs = face_sew_maps(&rhs).map_err(invalid)?;
            write_output(&io, &format!("{lhs}\n"))
        }
        Command::FaceCut { io, mark_edge } => {
            let maps = marked_maps(&io, 1)?;
            let (map, marks) = &maps[0];
            let es = marks_or(&mark_edge, marks, "edge")?;
            if es.len() != 2 {
                return Err(usage("two marked edges are needed"));
            }
            let lhs = FaceMarkedLhs::new(map, edge_in(map, es[0])?, edge_in(map, es[1])?);
            let rhs = face_cut_maps(&lhs).map_err(invalid)?;
            write_output(&io, &format!("{rhs}\n"))
        }
    }
}

fn join(records: Vec<String>) -> String {
    let mut s = records.join("\n\n");
    s.push('\n');
    s
}

impl From<Which> for crate::sweep::Which {
    fn from(w: Which) -> Self {
        match w {
            Which::Schaeffer => crate::sweep::Which::Schaeffer,
            Which::Vertex => crate::sweep::Which::Vertex,
            Which::Face => crate::sweep::Which::Face,
        }
    }
}
