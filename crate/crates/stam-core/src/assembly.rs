//! Assemblies: placed tiles, derived bonds, stability and signal firing.
//!
//! A bond is never stored; it exists exactly when two abutting glues are
//! both on and complementary. Signals are asynchronous: binding marks a
//! glue as fired (once, ever) and appends the rule's actions to the owning
//! tile's pending queue, to be enacted by later events.

use crate::geom::{Dir, Pos};
use crate::tile::{Action, Effect, GlueState, TileSet, TileTypeId};
use crate::glue::GlueId;
use std::collections::BTreeMap;

/// One placed tile and its mutable signal state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileInstance {
    pub ty: TileTypeId,
    pub states: Vec<GlueState>,
    pub fired: Vec<bool>,
    pub pending: Vec<Action>,
}

impl TileInstance {
    pub fn new(set: &TileSet, ty: TileTypeId) -> TileInstance {
        let t = set.ty(ty);
        let mut states = Vec::with_capacity(t.slot_count());
        for i in 0..t.slot_count() {
            states.push(t.slot(i).1.initial);
        }
        TileInstance {
            ty,
            fired: vec![false; states.len()],
            pending: Vec::new(),
            states,
        }
    }
}

/// A derived bond, anchored at its south/west endpoint: `side` is N or E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub pos: Pos,
    pub side: Dir,
    pub slot: usize,
    pub other_slot: usize,
    pub glue: GlueId,
    pub strength: u8,
}

/// A matched glue pair across a prospective seam between two assemblies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeamBond {
    /// Tile in the stationary assembly, absolute coordinates.
    pub a_pos: Pos,
    /// Direction from the `a` tile toward the incoming tile.
    pub side: Dir,
    pub a_slot: usize,
    /// Tile in the incoming assembly, in its own (untranslated) frame.
    pub b_pos: Pos,
    pub b_slot: usize,
    pub strength: u8,
}

/// What enacting one pending action did.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnactOutcome {
    pub state_changed: bool,
    /// Activation brought a complementary on-neighbour into contact.
    pub bond_formed: bool,
    /// Deactivation severed a live bond; the assembly may now be unstable.
    pub bond_removed: bool,
}

/// One forced break during stabilisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitStep {
    /// The severed weight-1 bridge, or None when the assembly was already
    /// disconnected and simply fell into components.
    pub cut: Option<(Pos, Dir)>,
    pub piece_sizes: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assembly {
    tiles: BTreeMap<Pos, TileInstance>,
}

impl Assembly {
    pub fn new() -> Assembly {
        Assembly::default()
    }

    pub fn single(set: &TileSet, ty: TileTypeId) -> Assembly {
        let mut a = Assembly::new();
        a.tiles.insert(Pos::new(0, 0), TileInstance::new(set, ty));
        a
    }

    pub fn insert(&mut self, pos: Pos, inst: TileInstance) {
        let old = self.tiles.insert(pos, inst);
        debug_assert!(old.is_none(), "tile placed on occupied cell {pos}");
    }

    pub fn get(&self, pos: Pos) -> Option<&TileInstance> {
        self.tiles.get(&pos)
    }

    pub fn get_mut(&mut self, pos: Pos) -> Option<&mut TileInstance> {
        self.tiles.get_mut(&pos)
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> impl Iterator<Item = (Pos, &TileInstance)> {
        self.tiles.iter().map(|(&p, t)| (p, t))
    }

    pub fn domain(&self) -> Vec<Pos> {
        self.tiles.keys().copied().collect()
    }

    /// Domain translated so its minimum corner sits at the origin; two
    /// assemblies have equal shape up to translation iff these are equal.
    pub fn canonical_domain(&self) -> Vec<Pos> {
        let (dx, dy) = match self.min_corner() {
            Some(p) => (-p.x, -p.y),
            None => (0, 0),
        };
        self.tiles.keys().map(|p| p.translate(dx, dy)).collect()
    }

    /// (min x, min y) over the domain, as a position.
    pub fn min_corner(&self) -> Option<Pos> {
        let mut it = self.tiles.keys();
        let first = *it.next()?;
        let mut mx = first.x;
        let mut my = first.y;
        for p in it {
            mx = mx.min(p.x);
            my = my.min(p.y);
        }
        Some(Pos::new(mx, my))
    }

    pub fn translate(&mut self, dx: i32, dy: i32) {
        let moved: BTreeMap<Pos, TileInstance> = std::mem::take(&mut self.tiles)
            .into_iter()
            .map(|(p, t)| (p.translate(dx, dy), t))
            .collect();
        self.tiles = moved;
    }

    /// True when no tile has queued signal actions.
    pub fn is_quiescent(&self) -> bool {
        self.tiles.values().all(|t| t.pending.is_empty())
    }

    pub fn pending_count(&self) -> usize {
        self.tiles.values().map(|t| t.pending.len()).sum()
    }

    /// All queued signal actions in canonical (position, queue) order.
    pub fn pending_signals(&self) -> impl Iterator<Item = (Pos, usize, Action)> + '_ {
        self.tiles.iter().flat_map(|(&p, t)| {
            t.pending.iter().enumerate().map(move |(i, &a)| (p, i, a))
        })
    }

    fn glue_state(&self, set: &TileSet, pos: Pos, side: Dir, glue: GlueId) -> Option<GlueState> {
        let t = self.tiles.get(&pos)?;
        let slot = set.ty(t.ty).slot_index(side, glue)?;
        Some(t.states[slot])
    }

    /// Is this glue currently in a bond? (Both endpoints on, complementary.)
    pub fn is_bound(&self, set: &TileSet, pos: Pos, side: Dir, glue: GlueId) -> bool {
        if self.glue_state(set, pos, side, glue) != Some(GlueState::On) {
            return false;
        }
        self.glue_state(set, pos.step(side), side.opposite(), set.glues.complement(glue))
            == Some(GlueState::On)
    }

    /// Every live bond, in canonical scan order (row-major, N before E).
    pub fn bonds(&self, set: &TileSet) -> Vec<Bond> {
        let mut out = Vec::new();
        for (&pos, tile) in &self.tiles {
            let ty = set.ty(tile.ty);
            for side in [Dir::N, Dir::E] {
                let npos = pos.step(side);
                let Some(ntile) = self.tiles.get(&npos) else { continue };
                let nty = set.ty(ntile.ty);
                for slot in ty.side_slot_range(side) {
                    if tile.states[slot] != GlueState::On {
                        continue;
                    }
                    let glue = ty.slot(slot).1.glue;
                    let comp = set.glues.complement(glue);
                    let Some(other_slot) = nty.slot_index(side.opposite(), comp) else {
                        continue;
                    };
                    if ntile.states[other_slot] != GlueState::On {
                        continue;
                    }
                    out.push(Bond {
                        pos,
                        side,
                        slot,
                        other_slot,
                        glue,
                        strength: set.glues.strength(glue),
                    });
                }
            }
        }
        out
    }

    pub fn bond_strength_total(&self, set: &TileSet) -> u32 {
        self.bonds(set).iter().map(|b| b.strength as u32).sum()
    }

    fn node_index(&self) -> BTreeMap<Pos, usize> {
        self.tiles.keys().enumerate().map(|(i, &p)| (p, i)).collect()
    }

    /// Connected components of the bond graph, as position sets.
    pub fn components(&self, set: &TileSet) -> Vec<Vec<Pos>> {
        let nodes: Vec<Pos> = self.tiles.keys().copied().collect();
        let index = self.node_index();
        let mut adj = vec![Vec::new(); nodes.len()];
        for b in self.bonds(set) {
            let u = index[&b.pos];
            let v = index[&b.pos.step(b.side)];
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; nodes.len()];
        let mut comps = Vec::new();
        for start in 0..nodes.len() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(nodes[u]);
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self, set: &TileSet) -> bool {
        self.len() <= 1 || self.components(set).len() == 1
    }

    /// Bridge bonds of the bond multigraph, in canonical bond order.
    /// Parallel bonds between the same tile pair shield each other.
    fn bridges(&self, set: &TileSet) -> Vec<Bond> {
        let bonds = self.bonds(set);
        let index = self.node_index();
        let n = self.tiles.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (eid, b) in bonds.iter().enumerate() {
            let u = index[&b.pos];
            let v = index[&b.pos.step(b.side)];
            adj[u].push((v, eid));
            adj[v].push((u, eid));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut is_bridge = vec![false; bonds.len()];
        let mut timer = 0usize;
        // frame: (node, parent node, entry edge id, next adjacency index)
        let mut stack: Vec<(usize, usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, usize::MAX, 0));
            while let Some(frame) = stack.last_mut() {
                let (u, _, entry, i) = *frame;
                if i < adj[u].len() {
                    frame.3 += 1;
                    let (v, eid) = adj[u][i];
                    if eid == entry {
                        continue;
                    }
                    if disc[v] != usize::MAX {
                        low[u] = low[u].min(disc[v]);
                    } else {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, u, eid, 0));
                    }
                } else {
                    let (u, parent, entry, _) = stack.pop().unwrap();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            is_bridge[entry] = true;
                        }
                    }
                }
            }
        }
        bonds
            .into_iter()
            .enumerate()
            .filter(|(eid, _)| is_bridge[*eid])
            .map(|(_, b)| b)
            .collect()
    }

    /// Weight-1 bridges: the only single-bond cuts below temperature 2.
    pub fn weak_bridges(&self, set: &TileSet) -> Vec<Bond> {
        self.bridges(set).into_iter().filter(|b| b.strength == 1).collect()
    }

    /// Is every cut of the bond graph at least `tau`?
    pub fn is_tau_stable(&self, set: &TileSet, tau: u32) -> bool {
        assert!(tau == 1 || tau == 2, "only temperatures 1 and 2 are supported");
        if self.len() <= 1 {
            return true;
        }
        if !self.is_connected(set) {
            return false;
        }
        tau == 1 || self.weak_bridges(set).is_empty()
    }

    /// The ways this assembly can break at temperature `tau`: whether some
    /// partition crosses no bond at all, plus every single bond that is the
    /// exact crossing of some partition with strength below `tau`.
    pub fn breakable_cuts(&self, set: &TileSet, tau: u32) -> BreakableCuts {
        assert!(tau == 1 || tau == 2, "only temperatures 1 and 2 are supported");
        let disconnected = !self.is_connected(set);
        // At temperature 1 no single-bond cut is below threshold.
        let bridges = if tau == 2 { self.weak_bridges(set) } else { Vec::new() };
        BreakableCuts { disconnected, bridges }
    }

    fn split_positions(&mut self, keep: &[Pos]) -> Assembly {
        // Removes `keep` from self and returns them as a new assembly.
        let mut out = Assembly::new();
        for p in keep {
            let t = self.tiles.remove(p).expect("split position missing");
            out.tiles.insert(*p, t);
        }
        out
    }

    /// Break the assembly along sub-threshold cuts until every piece is
    /// stable. Severed glues stay on; pieces keep absolute coordinates.
    /// Returns the stable pieces sorted by minimum corner, plus the breaks
    /// taken, for the trace.
    pub fn stabilize(self, set: &TileSet, tau: u32) -> (Vec<Assembly>, Vec<SplitStep>) {
        assert!(tau == 1 || tau == 2, "only temperatures 1 and 2 are supported");
        let mut done = Vec::new();
        let mut steps = Vec::new();
        let mut work = vec![self];
        while let Some(mut a) = work.pop() {
            if a.len() <= 1 {
                done.push(a);
                continue;
            }
            let comps = a.components(set);
            if comps.len() > 1 {
                steps.push(SplitStep {
                    cut: None,
                    piece_sizes: comps.iter().map(|c| c.len()).collect(),
                });
                for c in &comps[1..] {
                    work.push(a.split_positions(c));
                }
                work.push(a);
                continue;
            }
            if tau == 1 {
                done.push(a);
                continue;
            }
            let weak = a.weak_bridges(set);
            let Some(bridge) = weak.first().copied() else {
                done.push(a);
                continue;
            };
            // Component containing the bridge's far endpoint once the
            // bridge is ignored.
            let far = bridge.pos.step(bridge.side);
            let piece = a.component_without_bridge(set, bridge, far);
            let other = a.split_positions(&piece);
            steps.push(SplitStep {
                cut: Some((bridge.pos, bridge.side)),
                piece_sizes: vec![a.len(), other.len()],
            });
            work.push(a);
            work.push(other);
        }
        done.sort_by_key(|a| a.min_corner());
        (done, steps)
    }

    fn component_without_bridge(&self, set: &TileSet, bridge: Bond, from: Pos) -> Vec<Pos> {
        let index = self.node_index();
        let nodes: Vec<Pos> = self.tiles.keys().copied().collect();
        let mut adj = vec![Vec::new(); nodes.len()];
        for b in self.bonds(set) {
            if b == bridge {
                continue;
            }
            let u = index[&b.pos];
            let v = index[&b.pos.step(b.side)];
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; nodes.len()];
        let mut stack = vec![index[&from]];
        seen[index[&from]] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(nodes[u]);
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.sort();
        out
    }

    /// Mark a glue slot as having bound, queueing its rule's actions.
    /// A glue fires at most once over the life of the tile instance.
    pub fn fire_slot(&mut self, set: &TileSet, pos: Pos, slot: usize) {
        let tile = self.tiles.get_mut(&pos).expect("fire on empty cell");
        if tile.fired[slot] {
            return;
        }
        tile.fired[slot] = true;
        let ty = set.ty(tile.ty);
        let (side, s) = ty.slot(slot);
        if let Some(actions) = ty.rule(side, s.glue) {
            tile.pending.extend_from_slice(actions);
        }
    }

    /// Enact one queued action (removing it from the queue).
    pub fn enact_pending(&mut self, set: &TileSet, pos: Pos, queue_index: usize) -> EnactOutcome {
        let tile = self.tiles.get_mut(&pos).expect("signal on empty cell");
        let action = tile.pending.remove(queue_index);
        self.apply_action(set, pos, action)
    }

    /// Apply one action to the tile at `pos`. Activation is one-way
    /// (latent to on; off stays off); deactivation sends any state to off.
    /// An activation that brings a complementary on-neighbour into contact
    /// forms the bond immediately and fires both endpoint glues.
    pub fn apply_action(&mut self, set: &TileSet, pos: Pos, action: Action) -> EnactOutcome {
        let tile = self.tiles.get_mut(&pos).expect("action on empty cell");
        let ty = set.ty(tile.ty);
        let slot = ty
            .slot_index(action.side, action.glue)
            .expect("action targets a glue the tile lacks");
        let mut out = EnactOutcome::default();
        match (action.effect, tile.states[slot]) {
            (Effect::Activate, GlueState::Latent) => {
                tile.states[slot] = GlueState::On;
                out.state_changed = true;
                let npos = pos.step(action.side);
                let comp = set.glues.complement(action.glue);
                let nslot = self.tiles.get(&npos).and_then(|nt| {
                    let nty = set.ty(nt.ty);
                    let ns = nty.slot_index(action.side.opposite(), comp)?;
                    (nt.states[ns] == GlueState::On).then_some(ns)
                });
                if let Some(ns) = nslot {
                    out.bond_formed = true;
                    self.fire_slot(set, pos, slot);
                    self.fire_slot(set, npos, ns);
                }
            }
            (Effect::Activate, _) => {}
            (Effect::Deactivate, GlueState::On) => {
                out.state_changed = true;
                out.bond_removed = self.is_bound(set, pos, action.side, action.glue);
                self.tiles.get_mut(&pos).unwrap().states[slot] = GlueState::Off;
            }
            (Effect::Deactivate, GlueState::Latent) => {
                tile.states[slot] = GlueState::Off;
                out.state_changed = true;
            }
            (Effect::Deactivate, GlueState::Off) => {}
        }
        out
    }

    /// Do the two assemblies collide when `b` is shifted by (dx, dy)?
    pub fn overlaps(&self, b: &Assembly, dx: i32, dy: i32) -> bool {
        b.tiles.keys().any(|p| self.tiles.contains_key(&p.translate(dx, dy)))
    }

    /// All glue pairs that would bond if `b` were placed at (dx, dy),
    /// in canonical order over `b`'s tiles.
    pub fn match_edges(&self, set: &TileSet, b: &Assembly, dx: i32, dy: i32) -> Vec<SeamBond> {
        let mut out = Vec::new();
        for (&bp, btile) in &b.tiles {
            let world = bp.translate(dx, dy);
            let bty = set.ty(btile.ty);
            for side in Dir::ALL {
                let apos = world.step(side);
                let Some(atile) = self.tiles.get(&apos) else { continue };
                let aty = set.ty(atile.ty);
                for b_slot in bty.side_slot_range(side) {
                    if btile.states[b_slot] != GlueState::On {
                        continue;
                    }
                    let glue = bty.slot(b_slot).1.glue;
                    let comp = set.glues.complement(glue);
                    let Some(a_slot) = aty.slot_index(side.opposite(), comp) else {
                        continue;
                    };
                    if atile.states[a_slot] != GlueState::On {
                        continue;
                    }
                    out.push(SeamBond {
                        a_pos: apos,
                        side: side.opposite(),
                        a_slot,
                        b_pos: bp,
                        b_slot,
                        strength: set.glues.strength(glue),
                    });
                }
            }
        }
        out
    }

    pub fn seam_strength(seams: &[SeamBond]) -> u32 {
        seams.iter().map(|s| s.strength as u32).sum()
    }

    /// Seam check for an attachment event: no overlap and combined new bond
    /// strength at least `tau`. Returns the seam on success.
    pub fn can_attach(
        &self,
        set: &TileSet,
        b: &Assembly,
        dx: i32,
        dy: i32,
        tau: u32,
    ) -> Option<Vec<SeamBond>> {
        if self.overlaps(b, dx, dy) {
            return None;
        }
        let seams = self.match_edges(set, b, dx, dy);
        (Assembly::seam_strength(&seams) >= tau).then_some(seams)
    }

    /// Merge `b` (shifted by dx, dy) into self and fire every seam glue on
    /// both sides, atomically with the attachment.
    pub fn attach(&mut self, set: &TileSet, b: &Assembly, dx: i32, dy: i32, seams: &[SeamBond]) {
        for (&bp, btile) in &b.tiles {
            self.insert(bp.translate(dx, dy), btile.clone());
        }
        for s in seams {
            let a_tile_slot = (s.a_pos, s.a_slot);
            let b_world = s.b_pos.translate(dx, dy);
            self.fire_slot(set, a_tile_slot.0, a_tile_slot.1);
            self.fire_slot(set, b_world, s.b_slot);
        }
    }
}

/// Result of `breakable_cuts`: the complete description of how an assembly
/// can come apart below temperature 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakableCuts {
    pub disconnected: bool,
    pub bridges: Vec<Bond>,
}

impl BreakableCuts {
    pub fn is_stable(&self) -> bool {
        !self.disconnected && self.bridges.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tile::TileSet;

    fn two_tile_set() -> (TileSet, TileTypeId, TileTypeId) {
        let mut set = TileSet::new();
        let a = set
            .builder("left")
            .glue(Dir::E, "s", 2, GlueState::On)
            .glue(Dir::N, "k", 1, GlueState::Latent)
            .rule(Dir::E, "s", &[(Dir::N, "k", Effect::Activate)])
            .build()
            .unwrap();
        let b = set
            .builder("right")
            .glue(Dir::W, "s'", 2, GlueState::On)
            .build()
            .unwrap();
        (set, a, b)
    }

    #[test]
    fn attach_fires_both_seam_glues() {
        let (set, a, b) = two_tile_set();
        let mut left = Assembly::single(&set, a);
        let right = Assembly::single(&set, b);
        let seams = left.can_attach(&set, &right, 1, 0, 2).expect("strength 2 seam");
        assert_eq!(seams.len(), 1);
        left.attach(&set, &right, 1, 0, &seams);
        assert_eq!(left.len(), 2);
        assert_eq!(left.bonds(&set).len(), 1);
        // The left tile's rule queued its action; the right tile has none.
        assert_eq!(left.get(Pos::new(0, 0)).unwrap().pending.len(), 1);
        assert!(left.get(Pos::new(1, 0)).unwrap().pending.is_empty());
        // Single fire: firing the seam glue again is a no-op.
        left.fire_slot(&set, seams[0].a_pos, seams[0].a_slot);
        assert_eq!(left.get(Pos::new(0, 0)).unwrap().pending.len(), 1);
    }

    #[test]
    fn weak_seam_is_rejected() {
        let mut set = TileSet::new();
        let a = set
            .builder("a")
            .glue(Dir::E, "w", 1, GlueState::On)
            .build()
            .unwrap();
        let b = set
            .builder("b")
            .glue(Dir::W, "w'", 1, GlueState::On)
            .build()
            .unwrap();
        let left = Assembly::single(&set, a);
        let right = Assembly::single(&set, b);
        assert!(left.can_attach(&set, &right, 1, 0, 2).is_none());
        assert!(left.can_attach(&set, &right, 1, 0, 1).is_some());
        assert!(left.can_attach(&set, &right, 0, 0, 1).is_none(), "overlap");
    }

    #[test]
    fn activation_forms_bond_and_fires_both_ends() {
        let mut set = TileSet::new();
        let lo = set
            .builder("lo")
            .glue(Dir::N, "g", 2, GlueState::Latent)
            .glue(Dir::E, "t", 1, GlueState::Latent)
            .rule(Dir::N, "g", &[(Dir::E, "t", Effect::Activate)])
            .build()
            .unwrap();
        let hi = set
            .builder("hi")
            .glue(Dir::S, "g'", 2, GlueState::On)
            .glue(Dir::W, "u", 1, GlueState::Latent)
            .rule(Dir::S, "g'", &[(Dir::W, "u", Effect::Activate)])
            .build()
            .unwrap();
        let mut a = Assembly::new();
        a.insert(Pos::new(0, 0), TileInstance::new(&set, lo));
        a.insert(Pos::new(0, 1), TileInstance::new(&set, hi));
        assert!(a.bonds(&set).is_empty());
        let g = set.glues.lookup("g").unwrap();
        let out = a.apply_action(
            &set,
            Pos::new(0, 0),
            Action { side: Dir::N, glue: g, effect: Effect::Activate },
        );
        assert!(out.bond_formed);
        assert_eq!(a.bonds(&set).len(), 1);
        // Both endpoint rules queued their actions.
        assert_eq!(a.get(Pos::new(0, 0)).unwrap().pending.len(), 1);
        assert_eq!(a.get(Pos::new(0, 1)).unwrap().pending.len(), 1);
        // Activation is one-way: deactivate, then re-activate stays off.
        let out = a.apply_action(
            &set,
            Pos::new(0, 0),
            Action { side: Dir::N, glue: g, effect: Effect::Deactivate },
        );
        assert!(out.bond_removed);
        let out = a.apply_action(
            &set,
            Pos::new(0, 0),
            Action { side: Dir::N, glue: g, effect: Effect::Activate },
        );
        assert!(!out.state_changed);
        assert!(a.bonds(&set).is_empty());
    }

    #[test]
    fn deactivation_splits_assembly() {
        let (set, a, b) = two_tile_set();
        let mut asm = Assembly::single(&set, a);
        let right = Assembly::single(&set, b);
        let seams = asm.can_attach(&set, &right, 1, 0, 2).unwrap();
        asm.attach(&set, &right, 1, 0, &seams);
        let s = set.glues.lookup("s").unwrap();
        let out = asm.apply_action(
            &set,
            Pos::new(0, 0),
            Action { side: Dir::E, glue: s, effect: Effect::Deactivate },
        );
        assert!(out.bond_removed);
        let (pieces, steps) = asm.stabilize(&set, 2);
        assert_eq!(pieces.len(), 2);
        assert_eq!(steps.len(), 1);
        assert!(steps[0].cut.is_none(), "no bond left: plain disconnection");
        // The severed partner glue stays on.
        let right_piece = &pieces[1];
        assert_eq!(
            right_piece.get(Pos::new(1, 0)).unwrap().states[0],
            GlueState::On
        );
    }

    #[test]
    fn weak_bridge_chain_falls_apart() {
        let mut set = TileSet::new();
        let t = set
            .builder("chain")
            .glue(Dir::E, "c", 1, GlueState::On)
            .glue(Dir::W, "c'", 1, GlueState::On)
            .build()
            .unwrap();
        let mut a = Assembly::new();
        for x in 0..3 {
            a.insert(Pos::new(x, 0), TileInstance::new(&set, t));
        }
        assert!(a.is_connected(&set));
        assert!(!a.is_tau_stable(&set, 2));
        assert!(a.is_tau_stable(&set, 1));
        assert_eq!(a.weak_bridges(&set).len(), 2);
        let (pieces, steps) = a.stabilize(&set, 2);
        assert_eq!(pieces.len(), 3);
        assert_eq!(steps.len(), 2);
        assert!(steps.iter().all(|s| s.cut.is_some()));
    }

    #[test]
    fn parallel_weak_bonds_are_not_bridges() {
        let mut set = TileSet::new();
        let lo = set
            .builder("lo")
            .glue(Dir::E, "p", 1, GlueState::On)
            .glue(Dir::E, "q", 1, GlueState::On)
            .build()
            .unwrap();
        let hi = set
            .builder("hi")
            .glue(Dir::W, "p'", 1, GlueState::On)
            .glue(Dir::W, "q'", 1, GlueState::On)
            .build()
            .unwrap();
        let mut a = Assembly::new();
        a.insert(Pos::new(0, 0), TileInstance::new(&set, lo));
        a.insert(Pos::new(1, 0), TileInstance::new(&set, hi));
        assert_eq!(a.bonds(&set).len(), 2);
        assert!(a.is_tau_stable(&set, 2));
        assert!(a.weak_bridges(&set).is_empty());
    }

    #[test]
    fn match_edges_is_symmetric_in_strength() {
        let (set, a, b) = two_tile_set();
        let left = Assembly::single(&set, a);
        let right = Assembly::single(&set, b);
        let ab = left.match_edges(&set, &right, 1, 0);
        let ba = right.match_edges(&set, &left, -1, 0);
        assert_eq!(Assembly::seam_strength(&ab), Assembly::seam_strength(&ba));
        assert_eq!(ab.len(), ba.len());
    }
}
