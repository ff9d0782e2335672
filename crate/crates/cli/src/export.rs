//! Writing in-memory structures out as `.struct` declarations.

use homhopf::constructions::{BiproductSpec, CrossedProductSpec};
use homhopf::convact::{Coaction, Cocycle, ModuleAction};
use homhopf::corpus::{CorpusEntry, Payload};
use homhopf::exactlin::{Field, LinearMap, Space};
use homhopf::homcore::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf};

use crate::format::{Bundle, Declarations, MapDecl, ParseError, StructureFile, TensorDecl, TensorKind, GROUND};

/// Accumulates declarations under caller-chosen names. Spaces with equal
/// bases are declared once.
pub struct Exporter {
    decls: Declarations,
}

impl Exporter {
    pub fn new(field: Field) -> Exporter {
        Exporter {
            decls: Declarations::new(field),
        }
    }

    pub fn finish(self) -> Result<StructureFile, ParseError> {
        StructureFile::new(self.decls)
    }

    fn space(&mut self, hint: &str, s: &Space) -> String {
        if s == &Space::ground() {
            return GROUND.to_string();
        }
        if let Some((n, _)) = self.decls.spaces.iter().find(|(_, t)| *t == s) {
            return n.clone();
        }
        let mut name = hint.to_string();
        let mut i = 2;
        while self.decls.spaces.contains_key(&name) {
            name = format!("{hint}{i}");
            i += 1;
        }
        self.decls.spaces.insert(name.clone(), s.clone());
        name
    }

    fn map(&mut self, name: &str, from: &str, to: &str, m: &LinearMap) -> String {
        let decl = MapDecl {
            from: from.to_string(),
            to: to.to_string(),
            map: m.clone(),
        };
        self.decls.maps.insert(name.to_string(), decl);
        name.to_string()
    }

    fn tensor(&mut self, name: &str, kind: TensorKind, legs: [&str; 3], m: &LinearMap) -> String {
        let decl = TensorDecl {
            kind,
            legs: legs.map(str::to_string),
            map: m.clone(),
        };
        self.decls.tensors.insert(name.to_string(), decl);
        name.to_string()
    }

    fn bundle(&mut self, name: &str, b: Bundle) -> String {
        self.decls.bundles.insert(name.to_string(), b);
        name.to_string()
    }

    /// Declares `a` as bundle `name`, with its maps named `name.mult` and so on.
    pub fn algebra(&mut self, name: &str, space_hint: &str, a: &HomAlgebra) -> String {
        let s = self.space(space_hint, a.space());
        let b = Bundle::Algebra {
            mult: self.tensor(&format!("{name}.mult"), TensorKind::Product, [&s, &s, &s], a.mult()),
            unit: self.map(&format!("{name}.unit"), GROUND, &s, a.unit()),
            alpha: self.map(&format!("{name}.alpha"), &s, &s, a.alpha()),
            space: s,
        };
        self.bundle(name, b)
    }

    pub fn coalgebra(&mut self, name: &str, space_hint: &str, c: &HomCoalgebra) -> String {
        let s = self.space(space_hint, c.space());
        let b = Bundle::Coalgebra {
            comult: self.tensor(&format!("{name}.comult"), TensorKind::Coproduct, [&s, &s, &s], c.comult()),
            counit: self.map(&format!("{name}.counit"), &s, GROUND, c.counit()),
            gamma: self.map(&format!("{name}.gamma"), &s, &s, c.gamma()),
            space: s,
        };
        self.bundle(name, b)
    }

    /// A bialgebra `name` with parts `name.algebra` and `name.coalgebra`.
    pub fn bialgebra(&mut self, name: &str, space_hint: &str, b: &HomBialgebra) -> String {
        let algebra = self.algebra(&format!("{name}.algebra"), space_hint, b.algebra());
        let coalgebra = self.coalgebra(&format!("{name}.coalgebra"), space_hint, b.coalgebra());
        self.bundle(name, Bundle::Bialgebra { algebra, coalgebra })
    }

    pub fn hopf(&mut self, name: &str, space_hint: &str, h: &HomHopf) -> String {
        let bialgebra = self.bialgebra(&format!("{name}.bialgebra"), space_hint, h.bialgebra());
        let s = self.space(space_hint, h.bialgebra().space());
        let antipode = self.map(&format!("{name}.antipode"), &s, &s, h.antipode());
        self.bundle(name, Bundle::Hopf { bialgebra, antipode })
    }

    pub fn action(&mut self, name: &str, acting: &str, target: &str, a: &ModuleAction) -> String {
        let hs = self.space("H", a.acting().space());
        let ts = self.space("A", a.target().space());
        let act = self.tensor(&format!("{name}.act"), TensorKind::Product, [&hs, &ts, &ts], a.act());
        let b = Bundle::Action {
            acting: acting.into(),
            target: target.into(),
            act,
        };
        self.bundle(name, b)
    }

    pub fn coaction(&mut self, name: &str, coacting: &str, target: &str, c: &Coaction) -> String {
        let hs = self.space("H", c.coacting().space());
        let ts = self.space("A", c.target().space());
        let coact = self.tensor(&format!("{name}.coact"), TensorKind::Coproduct, [&ts, &hs, &ts], c.coact());
        let b = Bundle::Coaction {
            coacting: coacting.into(),
            target: target.into(),
            coact,
        };
        self.bundle(name, b)
    }

    pub fn cocycle(&mut self, name: &str, source: &str, target: &str, c: &Cocycle) -> String {
        let hs = self.space("H", c.source().space());
        let ts = self.space("A", c.target().space());
        let sigma = self.tensor(&format!("{name}.sigma"), TensorKind::Product, [&hs, &hs, &ts], c.sigma());
        let inverse = c
            .inverse()
            .map(|inv| self.tensor(&format!("{name}.inverse"), TensorKind::Product, [&hs, &hs, &ts], inv));
        let b = Bundle::Cocycle {
            source: source.into(),
            target: target.into(),
            sigma,
            inverse,
        };
        self.bundle(name, b)
    }

    /// Declares `H` (bundle `H`), `A` (bundle `A`), the action, the cocycle
    /// and the crossed-product bundle `name`.
    pub fn crossed(&mut self, name: &str, spec: &CrossedProductSpec) -> String {
        let h = self.bialgebra("H", "H", spec.bialgebra());
        let a = self.algebra("A", "A", spec.algebra());
        let action = self.action("action", &h, &a, spec.action());
        let cocycle = self.cocycle("sigma", &h, &a, spec.sigma());
        let b = Bundle::Crossed {
            action,
            cocycle,
            m: spec.m(),
            k: spec.k(),
        };
        self.bundle(name, b)
    }

    /// The crossed product of [`Exporter::crossed`] plus the coalgebra
    /// `A.coalgebra`, the coaction and, when given, the antipodes of `H`
    /// and `A`.
    pub fn biproduct(&mut self, name: &str, spec: &BiproductSpec, antipodes: Option<&(LinearMap, LinearMap)>) -> String {
        let crossed = self.crossed("crossed", spec.crossed());
        let c = self.coalgebra("A.coalgebra", "A", spec.coalgebra());
        let coaction = self.coaction("coaction", "H", &c, spec.coaction());
        let antipodes = antipodes.map(|(sh, sa)| {
            let (hs, as_) = (self.space("H", sh.domain()), self.space("A", sa.domain()));
            (self.map("H.antipode", &hs, &hs, sh), self.map("A.antipode", &as_, &as_, sa))
        });
        let b = Bundle::Biproduct {
            crossed,
            coaction,
            antipodes,
        };
        self.bundle(name, b)
    }
}

/// Name of the bundle [`export_entry`] puts the entry's payload under.
pub fn entry_bundle(entry: &CorpusEntry) -> &'static str {
    match entry.payload {
        Payload::Hopf(_) => "H",
        Payload::Crossed(_) => "crossed",
        Payload::Biproduct { .. } => "biproduct",
    }
}

/// A corpus entry as a `.struct` file.
pub fn export_entry(entry: &CorpusEntry) -> StructureFile {
    let field = match &entry.payload {
        Payload::Hopf(h) => h.bialgebra().field(),
        Payload::Crossed(s) => s.algebra().field(),
        Payload::Biproduct { spec, .. } => spec.crossed().algebra().field(),
    };
    let mut x = Exporter::new(field);
    match &entry.payload {
        Payload::Hopf(h) => {
            x.hopf("H", "H", h);
        }
        Payload::Crossed(s) => {
            x.crossed("crossed", s);
        }
        Payload::Biproduct { spec, antipodes } => {
            x.biproduct("biproduct", spec, antipodes.as_ref());
        }
    }
    x.finish().expect("corpus entries are well formed")
}
