//! Edge-to-edge BFS generation of a tiling from its vertex configuration
//! alone (no geometry, no group theory), and a rooted isomorphism check
//! between the generated structure and a geometric patch.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct CVert {
    nbr: Vec<Option<(usize, usize)>>,
    face: Vec<Option<usize>>,
    rots: Vec<usize>,
    layer: usize,
}

#[derive(Clone, Debug)]
struct CFace {
    gon: usize,
    closed: bool,
    arc: VecDeque<(usize, usize)>,
    alive: bool,
}

pub struct Combo {
    pub k: usize,
    pub config: Vec<usize>,
    verts: Vec<CVert>,
    faces: Vec<CFace>,
    face_alias: Vec<usize>,
}

#[derive(Debug)]
pub enum ComboError {
    Contradiction(String),
}

impl Combo {
    /// Grows the tiling with all vertices of layer < `layers` completed.
    /// Rotation ambiguities that deferral cannot settle are resolved by a
    /// depth-first search over the guesses, restarting the cheap generation
    /// with the decision prefix.
    pub fn generate(config: &[usize], layers: usize) -> Result<Combo, ComboError> {
        let mut decisions: Vec<usize> = Vec::new();
        loop {
            match Self::attempt(config, layers, &decisions) {
                (Ok(c), _) => return Ok(c),
                (Err(e), counts) => {
                    // back up to the last decision with candidates left
                    while let Some(last) = decisions.pop() {
                        let idx = decisions.len();
                        if idx < counts.len() && last + 1 < counts[idx] {
                            decisions.push(last + 1);
                            break;
                        }
                    }
                    if decisions.is_empty() {
                        if counts.is_empty() {
                            return Err(e);
                        }
                        // root level: open a first guess if any fallback was hit
                        decisions.push(0);
                        if let (Ok(c), _) = Self::attempt(config, layers, &decisions) {
                            return Ok(c);
                        }
                        decisions[0] += 1;
                        if decisions[0] >= counts[0] {
                            return Err(e);
                        }
                    }
                }
            }
        }
    }

    fn attempt(
        config: &[usize],
        layers: usize,
        decisions: &[usize],
    ) -> (Result<Combo, ComboError>, Vec<usize>) {
        let k = config.len();
        let mut c = Combo {
            k,
            config: config.to_vec(),
            verts: vec![CVert {
                nbr: vec![None; k],
                face: vec![None; k],
                rots: vec![0], // the seed fixes rotation 0
                layer: 0,
            }],
            faces: Vec::new(),
            face_alias: Vec::new(),
        };
        let mut counts: Vec<usize> = Vec::new();
        let mut done: Vec<bool> = vec![false];
        loop {
            // complete any unambiguous vertex first; guess only when forced
            let pending: Vec<usize> = (0..c.verts.len())
                .filter(|&v| !done[v] && c.verts[v].layer < layers)
                .collect();
            if pending.is_empty() {
                break;
            }
            let v = match pending.iter().find(|&&v| c.verts[v].rots.len() == 1) {
                Some(&v) => v,
                None => {
                    // guess point: the pending vertex with fewest candidates
                    let &v = pending
                        .iter()
                        .min_by_key(|&&v| (c.verts[v].rots.len(), v))
                        .unwrap();
                    if c.verts[v].rots.is_empty() {
                        return (
                            Err(ComboError::Contradiction(format!(
                                "vertex {v} has no rotation left"
                            ))),
                            counts,
                        );
                    }
                    let pick = decisions.get(counts.len()).copied().unwrap_or(0);
                    counts.push(c.verts[v].rots.len());
                    let mut rots = std::mem::take(&mut c.verts[v].rots);
                    rots.sort();
                    if pick >= rots.len() {
                        return (
                            Err(ComboError::Contradiction("decision out of range".into())),
                            counts,
                        );
                    }
                    c.verts[v].rots = vec![rots[pick]];
                    v
                }
            };
            match c.complete_vertex(v) {
                Ok(_created) => {
                    done[v] = true;
                    done.resize(c.verts.len(), false);
                }
                Err(e) => return (Err(e), counts),
            }
        }
        match c.audit() {
            Ok(()) => (Ok(c), counts),
            Err(e) => (Err(e), counts),
        }
    }

    fn find_face(&self, mut f: usize) -> usize {
        while self.face_alias[f] != f {
            f = self.face_alias[f];
        }
        f
    }

    fn gon_at(&self, v: usize, s: usize) -> usize {
        let r = self.verts[v].rots[0];
        self.config[(s + r) % self.k]
    }

    fn assign_face(&mut self, v: usize, s: usize, f: usize) -> Result<(), ComboError> {
        let f = self.find_face(f);
        let gon = self.faces[f].gon;
        let vert = &mut self.verts[v];
        vert.face[s] = Some(f);
        let k = self.k;
        let config = &self.config;
        vert.rots.retain(|&r| config[(s + r) % k] == gon);
        if vert.rots.is_empty() {
            return Err(ComboError::Contradiction(format!(
                "vertex {v} slot {s} cannot host a {gon}-gon"
            )));
        }
        Ok(())
    }

    fn face_at(&self, v: usize, s: usize) -> Option<usize> {
        self.verts[v].face[s].map(|f| self.find_face(f))
    }

    /// Records that corner `x` is immediately followed by corner `y` on the
    /// boundary of a common face, growing/merging/closing arcs.
    fn face_step(
        &mut self,
        x: (usize, usize),
        y: (usize, usize),
        links: &mut VecDeque<((usize, usize), (usize, usize))>,
    ) -> Result<(), ComboError> {
        let fx = self.face_at(x.0, x.1);
        let fy = self.face_at(y.0, y.1);
        match (fx, fy) {
            (Some(f), None) => {
                if self.faces[f].arc.back() != Some(&x) {
                    return Err(ComboError::Contradiction(format!(
                        "corner {x:?} is not the open end of its face"
                    )));
                }
                self.faces[f].arc.push_back(y);
                self.assign_face(y.0, y.1, f)?;
                self.maybe_close(f, links)?;
            }
            (None, Some(f)) => {
                if self.faces[f].arc.front() != Some(&y) {
                    return Err(ComboError::Contradiction(format!(
                        "corner {y:?} is not the open start of its face"
                    )));
                }
                self.faces[f].arc.push_front(x);
                self.assign_face(x.0, x.1, f)?;
                self.maybe_close(f, links)?;
            }
            (None, None) => {
                // neither side of this edge knows its face yet; the relation
                // is replayed when a corona completion creates one
            }
            (Some(f), Some(g)) if f == g => {
                let face = &self.faces[f];
                // already recorded as consecutive corners?
                if let Some(pos) = face.arc.iter().position(|&c| c == x) {
                    if face.arc.get(pos + 1) == Some(&y) {
                        return Ok(());
                    }
                }
                // otherwise this must be the closing step
                if face.arc.back() == Some(&x) && face.arc.front() == Some(&y) {
                    if face.arc.len() == face.gon {
                        self.faces[f].closed = true;
                    } else {
                        return Err(ComboError::Contradiction(format!(
                            "face {f} closes with {} of {} corners",
                            face.arc.len(),
                            face.gon
                        )));
                    }
                } else {
                    return Err(ComboError::Contradiction(
                        "face step between interior corners".into(),
                    ));
                }
            }
            (Some(f), Some(g)) => {
                // two growth fronts of the same geometric face meet
                if self.faces[f].gon != self.faces[g].gon {
                    return Err(ComboError::Contradiction("merging faces of unequal gon".into()));
                }
                if self.faces[f].arc.back() != Some(&x) || self.faces[g].arc.front() != Some(&y) {
                    return Err(ComboError::Contradiction("face merge at interior corners".into()));
                }
                let garc = std::mem::take(&mut self.faces[g].arc);
                self.faces[f].arc.extend(garc);
                self.faces[g].alive = false;
                self.face_alias[g] = f;
                if self.faces[f].arc.len() > self.faces[f].gon {
                    return Err(ComboError::Contradiction("face exceeds its gon".into()));
                }
                self.maybe_close(f, links)?;
            }
        }
        Ok(())
    }

    fn maybe_close(
        &mut self,
        f: usize,
        links: &mut VecDeque<((usize, usize), (usize, usize))>,
    ) -> Result<(), ComboError> {
        let f = self.find_face(f);
        let face = &self.faces[f];
        if face.closed || face.arc.len() < face.gon {
            return Ok(());
        }
        if face.arc.len() > face.gon {
            return Err(ComboError::Contradiction("face overfull".into()));
        }
        // the closing edge runs from the arc end's next slot to the start
        let &(ue, se) = face.arc.back().unwrap();
        let &(us, ss) = face.arc.front().unwrap();
        let k = self.k;
        links.push_back(((ue, (se + 1) % k), (us, ss)));
        Ok(())
    }

    fn link(
        &mut self,
        a: (usize, usize),
        b: (usize, usize),
        links: &mut VecDeque<((usize, usize), (usize, usize))>,
    ) -> Result<(), ComboError> {
        match (self.verts[a.0].nbr[a.1], self.verts[b.0].nbr[b.1]) {
            (Some(x), Some(y)) if x == b && y == a => {}
            (None, None) => {
                self.verts[a.0].nbr[a.1] = Some(b);
                self.verts[b.0].nbr[b.1] = Some(a);
            }
            _ => {
                return Err(ComboError::Contradiction(format!(
                    "edge slot conflict linking {a:?} and {b:?}"
                )))
            }
        }
        self.edge_faces(a, b, links)
    }

    /// (Re)plays the two face relations across an edge.
    fn edge_faces(
        &mut self,
        a: (usize, usize),
        b: (usize, usize),
        links: &mut VecDeque<((usize, usize), (usize, usize))>,
    ) -> Result<(), ComboError> {
        let k = self.k;
        self.face_step((a.0, (a.1 + k - 1) % k), (b.0, b.1), links)?;
        self.face_step((b.0, (b.1 + k - 1) % k), (a.0, a.1), links)?;
        Ok(())
    }

    fn drain_links(
        &mut self,
        links: &mut VecDeque<((usize, usize), (usize, usize))>,
    ) -> Result<(), ComboError> {
        while let Some((a, b)) = links.pop_front() {
            self.link(a, b, links)?;
        }
        Ok(())
    }

    fn complete_vertex(&mut self, v: usize) -> Result<Vec<usize>, ComboError> {
        let k = self.k;
        let mut links: VecDeque<((usize, usize), (usize, usize))> = VecDeque::new();
        // ensure every corner has a face object
        for s in 0..k {
            if self.face_at(v, s).is_none() {
                let gon = self.gon_at(v, s);
                let fid = self.faces.len();
                self.faces.push(CFace {
                    gon,
                    closed: false,
                    arc: VecDeque::from([(v, s)]),
                    alive: true,
                });
                self.face_alias.push(fid);
                self.assign_face(v, s, fid)?;
            }
        }
        // replay face relations across edges that already exist
        for s in 0..k {
            if let Some(b) = self.verts[v].nbr[s] {
                self.edge_faces((v, s), b, &mut links)?;
            }
        }
        self.drain_links(&mut links)?;
        // ensure every edge exists
        let mut created = Vec::new();
        for s in 0..k {
            self.drain_links(&mut links)?;
            if self.verts[v].nbr[s].is_some() {
                continue;
            }
            let w = self.verts.len();
            self.verts.push(CVert {
                nbr: vec![None; k],
                face: vec![None; k],
                rots: (0..k).collect(),
                layer: self.verts[v].layer + 1,
            });
            created.push(w);
            self.link((v, s), (w, 0), &mut links)?;
            self.drain_links(&mut links)?;
        }
        self.drain_links(&mut links)?;
        Ok(created)
    }

    fn audit(&self) -> Result<(), ComboError> {
        for (fi, f) in self.faces.iter().enumerate() {
            if f.alive && f.closed && f.arc.len() != f.gon {
                return Err(ComboError::Contradiction(format!("face {fi} closed at wrong size")));
            }
        }
        for (vi, v) in self.verts.iter().enumerate() {
            if v.rots.is_empty() {
                return Err(ComboError::Contradiction(format!("vertex {vi} impossible")));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Vertices with all edges linked and faces assigned.
    fn is_complete(&self, v: usize) -> bool {
        self.verts[v].nbr.iter().all(|n| n.is_some())
            && self.verts[v].face.iter().all(|f| f.is_some())
    }

    fn left_gon(&self, v: usize, s: usize) -> Option<usize> {
        let k = self.k;
        self.face_at(v, (s + k - 1) % k).map(|f| self.faces[f].gon)
    }
}

/// Prints the first vertices' slots for debugging.
pub fn debug_dump(c: &Combo, upto: usize) {
    for v in 0..=upto.min(c.vertex_count() - 1) {
        let gons: Vec<Option<usize>> = (0..c.k).map(|s| c.face_at(v, s).map(|f| c.faces[f].gon)).collect();
        let nbr: Vec<Option<(usize, usize)>> = c.verts[v].nbr.clone();
        eprintln!("combo v{v}: layer {} rots {:?} faces {:?} nbr {:?}", c.verts[v].layer, c.verts[v].rots, gons, nbr);
    }
}

/// Rooted isomorphism between the complete interior of a geometric patch and
/// the combinatorially generated tiling, by dart BFS. Darts are (vertex,
/// edge-slot) pairs; the certificate compared is the left-face gon of every
/// dart together with the rotation system.
pub fn patch_matches_combo(patch: &tessella::geom::Patch, combo: &Combo) -> bool {
    let k = combo.k;
    // geometric side: per complete vertex, neighbours in cyclic order and
    // the gon of the tile between consecutive edges
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); patch.vertices.len()];
    let mut left: Vec<Vec<usize>> = vec![Vec::new(); patch.vertices.len()];
    for (vi, v) in patch.vertices.iter().enumerate() {
        if !v.complete {
            continue;
        }
        // neighbours: corner-adjacent vertices over incident tiles
        let mut cand: Vec<usize> = Vec::new();
        for &ti in &v.tiles {
            let cs = &patch.tiles[ti].corner_vertices;
            let n = cs.len();
            let pos = cs.iter().position(|&x| x == vi).unwrap();
            for q in [(pos + 1) % n, (pos + n - 1) % n] {
                if !cand.contains(&cs[q]) {
                    cand.push(cs[q]);
                }
            }
        }
        if cand.len() != k {
            continue;
        }
        let frame = patch.model.frame_at(v.point);
        cand.sort_by(|&a, &b| {
            let aa = patch.model.angle_from(&frame, patch.vertices[a].point);
            let ab = patch.model.angle_from(&frame, patch.vertices[b].point);
            aa.partial_cmp(&ab).unwrap()
        });
        // tile between edge s and edge s+1: the unique incident tile having
        // both neighbours as corners
        let mut lg = vec![0usize; k];
        for s in 0..k {
            let pair = (cand[s], cand[(s + 1) % k]);
            let tile = v.tiles.iter().find(|&&ti| {
                let cs = &patch.tiles[ti].corner_vertices;
                cs.contains(&pair.0) && cs.contains(&pair.1)
            });
            match tile {
                Some(&ti) => lg[s] = patch.tiles[ti].gon as usize,
                None => return false,
            }
        }
        nbrs[vi] = cand;
        // left face of dart s is the tile between s-1 and s
        left[vi] = (0..k).map(|s| lg[(s + k - 1) % k]).collect();
    }
    if nbrs[0].is_empty() {
        return false; // seed vertex must be complete
    }

    // try all rotations and both orientations of the seed alignment
    'outer: for flip in [false, true] {
        for shift in 0..k {
            // vertex map geo -> combo, and per-vertex slot alignment
            let mut vmap: Vec<Option<(usize, usize, bool)>> = vec![None; patch.vertices.len()];
            let mut used: Vec<Option<usize>> = vec![None; combo.vertex_count()];
            vmap[0] = Some((0, shift, flip));
            used[0] = Some(0);
            let mut queue = VecDeque::from([0usize]);
            let mut ok = true;
            while let Some(gv) = queue.pop_front() {
                let (cv, sh, fl) = vmap[gv].unwrap();
                if nbrs[gv].is_empty() {
                    continue; // boundary vertex: no constraints beyond the map
                }
                if !combo.is_complete(cv) {
                    ok = false;
                    break;
                }
                for s in 0..k {
                    // geo dart s corresponds to combo slot
                    let cs = if fl { (sh + k - (s % k)) % k } else { (sh + s) % k };
                    // left gon must match (mirror flips to the right face)
                    let cg = if fl {
                        combo.left_gon(cv, (cs + 1) % k)
                    } else {
                        combo.left_gon(cv, cs)
                    };
                    if cg != Some(left[gv][s]) {
                        ok = false;
                        break;
                    }
                    let (cw, ct) = match combo.verts[cv].nbr[cs] {
                        Some(x) => x,
                        None => {
                            ok = false;
                            break;
                        }
                    };
                    let gw = nbrs[gv][s];
                    // alignment at the neighbour: its dart back to gv sits at
                    // combo slot ct and geo slot (position of gv among gw's
                    // neighbours)
                    if nbrs[gw].is_empty() {
                        // boundary geo vertex: only check vertex-map consistency
                        match vmap[gw] {
                            None => {
                                if used[cw].is_some() {
                                    ok = false;
                                    break;
                                }
                                vmap[gw] = Some((cw, 0, fl));
                                used[cw] = Some(gw);
                            }
                            Some((prev, _, _)) if prev != cw => {
                                ok = false;
                                break;
                            }
                            _ => {}
                        }
                        continue;
                    }
                    let back = nbrs[gw].iter().position(|&x| x == gv).unwrap();
                    let sh_w = if fl { (ct + back) % k } else { (ct + k - back % k) % k };
                    match vmap[gw] {
                        None => {
                            if used[cw].is_some() {
                                ok = false;
                                break;
                            }
                            vmap[gw] = Some((cw, sh_w, fl));
                            used[cw] = Some(gw);
                            queue.push_back(gw);
                        }
                        Some((pcv, psh, pfl)) => {
                            if pcv != cw || psh != sh_w || pfl != fl {
                                ok = false;
                                break;
                            }
                        }
                    }
                }
                if !ok {
                    continue 'outer;
                }
            }
            if ok {
                return true;
            }
        }
    }
    false
}
