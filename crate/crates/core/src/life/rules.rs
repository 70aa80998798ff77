use crate::error::Result;
use crate::life::grid::CellGrid;
use crate::synthesis::table::TruthTable;

/// Operand index of the centre cell within the 9-cell neighbourhood.
pub const CENTER: usize = 4;

/// Next-state table over `I_1..I_9`: born with exactly three live
/// neighbours, survives with two or three.
pub fn conway_truth_table() -> TruthTable {
    TruthTable::from_index_fn(9, |g| {
        let center = g >> (8 - CENTER) & 1 == 1;
        let neighbors = g.count_ones() - u32::from(center);
        neighbors == 3 || (center && neighbors == 2)
    })
    .expect("9 operands is in range")
}

/// Index of a neighbourhood in a 9-input table (`I_1` most significant).
pub fn neighborhood_index(cells: &[bool; 9]) -> usize {
    cells.iter().fold(0, |acc, &b| acc << 1 | usize::from(b))
}

/// Textbook Life update, computed directly from neighbour counts.
pub fn direct_step(g: &CellGrid) -> CellGrid {
    g.map_cells(|r, c| {
        let mut live = 0;
        for dr in -1..=1 {
            for dc in -1..=1 {
                if (dr, dc) != (0, 0) && g.offset(r, c, dr, dc) {
                    live += 1;
                }
            }
        }
        live == 3 || (live == 2 && g.get(r, c))
    })
}

/// Applies an arbitrary 9-input table by direct lookup.
pub fn table_step(g: &CellGrid, rule: &TruthTable) -> Result<CellGrid> {
    if rule.input_count() != 9 {
        return Err(crate::error::Error::InvalidConfig(format!(
            "rule table has {} inputs, expected 9",
            rule.input_count()
        )));
    }
    Ok(g.map_cells(|r, c| rule.get(neighborhood_index(&g.neighborhood(r, c)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::life::grid::Boundary;

    #[test]
    fn conway_table_examples() {
        let t = conway_truth_table();
        assert!(!t.get(0));
        // centre plus NW and N
        assert!(t.get(0b110_010_000));
        // dead centre, two neighbours: stays dead
        assert!(!t.get(0b110_000_000));
        assert!(t.get(0b111_000_000));
        assert!(!t.get(0b111_010_001));
    }

    #[test]
    fn blinker_period_two() {
        let g = CellGrid::parse_pattern(".....\n.....\n.OOO.\n.....\n.....\n", Boundary::Dead).unwrap();
        let once = direct_step(&g);
        assert_ne!(once, g);
        assert_eq!(once.live_cells().collect::<Vec<_>>(), vec![(1, 2), (2, 2), (3, 2)]);
        assert_eq!(direct_step(&once), g);
    }

    #[test]
    fn glider_on_torus() {
        // hand-enumerated four-phase cycle on 6x6
        let phases = [
            ".O....\n..O...\nOOO...\n......\n......\n......\n",
            "......\nO.O...\n.OO...\n.O....\n......\n......\n",
            "......\n..O...\nO.O...\n.OO...\n......\n......\n",
            "......\n.O....\n..OO..\n.OO...\n......\n......\n",
            "......\n..O...\n...O..\n.OOO..\n......\n......\n",
        ];
        let grids: Vec<_> = phases
            .iter()
            .map(|p| CellGrid::parse_pattern(p, Boundary::Toroidal).unwrap())
            .collect();
        for k in 0..4 {
            assert_eq!(direct_step(&grids[k]), grids[k + 1], "phase {k}");
        }
        // full lap around the torus: 6 diagonal cells x 4 steps
        let mut g = grids[0].clone();
        for _ in 0..24 {
            g = direct_step(&g);
        }
        assert_eq!(g, grids[0]);
    }

    #[test]
    fn empty_is_fixed_point() {
        for b in [Boundary::Dead, Boundary::Toroidal] {
            let g = CellGrid::new(5, 4, b).unwrap();
            assert_eq!(direct_step(&g), g);
            assert_eq!(table_step(&g, &conway_truth_table()).unwrap(), g);
        }
    }
}
