//! Lazy, memoized cycle index series.
//!
//! A [`CycleIndexSeries`] is a shared handle to a node that knows how to
//! produce its degree-`n` component on demand. Components are computed at
//! most once and then cached; asking for degree `n` computes exactly what
//! degree `n` depends on and nothing more, so there is no global truncation
//! order.
//!
//! Recursive definitions go through [`SeriesHandle`]. A definition is
//! well-founded when degree `n` only ever asks for its own handle at degrees
//! below `n`; a same-degree re-entry is reported as
//! [`Error::UnguardedRecursion`] instead of looping.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Condvar, Mutex, OnceLock};
use std::thread::{self, ThreadId};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::PowerSumPoly;
use crate::scalar::Scalar;

/// Produces the degree-`n` component of a series.
pub trait Generator<T>: Send + Sync {
    fn generate(&self, degree: usize) -> Result<PowerSumPoly<T>>;
}

impl<T, F> Generator<T> for F
where
    F: Fn(usize) -> Result<PowerSumPoly<T>> + Send + Sync,
{
    fn generate(&self, degree: usize) -> Result<PowerSumPoly<T>> {
        self(degree)
    }
}

enum Slot<T> {
    Empty,
    Busy(ThreadId),
    Done(Arc<PowerSumPoly<T>>),
}

struct Node<T> {
    generator: Box<dyn Generator<T>>,
    memo: Mutex<Vec<Slot<T>>>,
    ready: Condvar,
}

/// Cycle index series `Z_F = Σ_n Z_F[n]`, with `Z_F[n]` homogeneous of degree `n`.
pub struct CycleIndexSeries<T>(Arc<Node<T>>);

impl<T> Clone for CycleIndexSeries<T> {
    fn clone(&self) -> Self {
        Self(Arc::clone(&self.0))
    }
}

impl<T> fmt::Debug for CycleIndexSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let computed = self
            .0
            .memo
            .lock()
            .map(|m| m.iter().filter(|s| matches!(s, Slot::Done(_))).count())
            .unwrap_or(0);
        f.debug_struct("CycleIndexSeries")
            .field("computed_components", &computed)
            .finish()
    }
}

impl<T: Scalar> CycleIndexSeries<T> {
    pub fn from_generator(generator: impl Generator<T> + 'static) -> Self {
        Self(Arc::new(Node {
            generator: Box::new(generator),
            memo: Mutex::new(Vec::new()),
            ready: Condvar::new(),
        }))
    }

    /// Series whose degree-`n` component is `f(n)`. `f(n)` must have degree `n`.
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(usize) -> Result<PowerSumPoly<T>> + Send + Sync + 'static,
    {
        Self::from_generator(f)
    }

    /// A polynomial series: the given components, zero afterwards.
    pub fn from_components(components: Vec<PowerSumPoly<T>>) -> Self {
        for (n, c) in components.iter().enumerate() {
            assert_eq!(c.degree(), n, "component {n} has the wrong degree");
        }
        Self::from_fn(move |n| {
            Ok(components
                .get(n)
                .cloned()
                .unwrap_or_else(|| PowerSumPoly::zero(n)))
        })
    }

    pub fn zero() -> Self {
        Self::from_fn(|n| Ok(PowerSumPoly::zero(n)))
    }

    pub fn one() -> Self {
        Self::from_components(vec![PowerSumPoly::one()])
    }

    /// `Z_X = p_1`.
    pub fn singleton() -> Self {
        Self::from_components(vec![
            PowerSumPoly::zero(0),
            PowerSumPoly::monomial(Partition::ones(1), T::one()),
        ])
    }

    /// The degree-`n` component, computing it if needed.
    pub fn component(&self, n: usize) -> Result<Arc<PowerSumPoly<T>>> {
        let me = thread::current().id();
        let node = &*self.0;
        {
            let mut memo = node.memo.lock().expect("series memo poisoned");
            loop {
                if memo.len() <= n {
                    memo.resize_with(n + 1, || Slot::Empty);
                }
                match &memo[n] {
                    Slot::Done(poly) => return Ok(Arc::clone(poly)),
                    Slot::Busy(owner) if *owner == me => {
                        return Err(Error::UnguardedRecursion { degree: n })
                    }
                    Slot::Busy(_) => {
                        memo = node.ready.wait(memo).expect("series memo poisoned");
                    }
                    Slot::Empty => {
                        memo[n] = Slot::Busy(me);
                        break;
                    }
                }
            }
        }

        let outcome = node.generator.generate(n);

        let mut memo = node.memo.lock().expect("series memo poisoned");
        let result = match outcome {
            Ok(poly) => {
                assert_eq!(poly.degree(), n, "generator produced the wrong degree");
                let poly = Arc::new(poly);
                memo[n] = Slot::Done(Arc::clone(&poly));
                Ok(poly)
            }
            Err(err) => {
                memo[n] = Slot::Empty;
                Err(err)
            }
        };
        node.ready.notify_all();
        result
    }

    /// Components `0..=max_degree`, forced in increasing order.
    pub fn components(&self, max_degree: usize) -> Result<Vec<Arc<PowerSumPoly<T>>>> {
        (0..=max_degree).map(|n| self.component(n)).collect()
    }

    /// Coefficient of `x^n` in `F(x) = Z_F(x, 0, 0, …)`, i.e. `f_n / n!`.
    pub fn egf_coefficient(&self, n: usize) -> Result<T> {
        Ok(self.component(n)?.egf_coefficient())
    }

    /// Coefficient of `x^n` in `Z_F(x, x², x³, …)`.
    pub fn tgf_coefficient(&self, n: usize) -> Result<T> {
        Ok(self.component(n)?.tgf_coefficient())
    }

    /// First degree `≤ max_degree` where the two series differ, if any.
    pub fn first_difference(&self, other: &Self, max_degree: usize) -> Result<Option<usize>> {
        for n in 0..=max_degree {
            if *self.component(n)? != *other.component(n)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Exact agreement of components `0..=max_degree`.
    pub fn agrees_with(&self, other: &Self, max_degree: usize) -> Result<bool> {
        Ok(self.first_difference(other, max_degree)?.is_none())
    }

    pub fn scale(&self, factor: T) -> Self {
        let inner = self.clone();
        Self::from_fn(move |n| Ok(inner.component(n)?.scale(&factor)))
    }

    /// `∂/∂p_1`: the cycle index of the derivative species `F′`.
    pub fn derivative(&self) -> Self {
        let inner = self.clone();
        Self::from_fn(move |n| Ok(inner.component(n + 1)?.derivative_p1()))
    }

    /// `p_1 · ∂/∂p_1`: the cycle index of the pointed species `X·F′`.
    pub fn point(&self) -> Self {
        let inner = self.clone();
        Self::from_fn(move |n| Ok(inner.component(n)?.pointed()))
    }

    /// Plethystic composition `F ∘ G`. `G` must have zero constant term; this
    /// is checked when a component that needs `G` is forced.
    pub fn compose(&self, inner: &Self) -> Self {
        let inner = inner.clone();
        Self::from_generator(Plethysm::new(self.clone(), move |_| inner.clone()))
    }

    /// Compositional inverse `R` with `F ∘ R = R ∘ F = X`, defined as the
    /// fixpoint `R = X − (F − X) ∘ R`.
    pub fn comp_inverse(&self) -> Result<Self> {
        let x = Self::singleton();
        if !self.component(0)?.is_zero() || *self.component(1)? != *x.component(1)? {
            return Err(Error::NotInvertible);
        }
        let handle = SeriesHandle::new();
        let body = &x - &(self - &x).compose(&handle.series());
        handle.define(body)?;
        Ok(handle.series())
    }

    /// Componentwise average; the cycle index of a quotient by a group whose
    /// Γ-cycle index is `parts`.
    pub fn average(parts: Vec<Self>) -> Self {
        assert!(!parts.is_empty(), "average of no series");
        let weight = T::ratio(1, parts.len() as i64);
        Self::from_fn(move |n| {
            let mut total = PowerSumPoly::zero(n);
            for part in &parts {
                total.add_assign_unchecked(&*part.component(n)?);
            }
            Ok(total.scale(&weight))
        })
    }
}

/// Sum and product generators forward to the components of both operands.
impl<T: Scalar> Add for &CycleIndexSeries<T> {
    type Output = CycleIndexSeries<T>;

    fn add(self, rhs: Self) -> CycleIndexSeries<T> {
        let (a, b) = (self.clone(), rhs.clone());
        CycleIndexSeries::from_fn(move |n| {
            let mut out = (*a.component(n)?).clone();
            out.add_assign_unchecked(&*b.component(n)?);
            Ok(out)
        })
    }
}

impl<T: Scalar> Sub for &CycleIndexSeries<T> {
    type Output = CycleIndexSeries<T>;

    fn sub(self, rhs: Self) -> CycleIndexSeries<T> {
        let (a, b) = (self.clone(), rhs.clone());
        CycleIndexSeries::from_fn(move |n| a.component(n)?.try_sub(&*b.component(n)?))
    }
}

impl<T: Scalar> Neg for &CycleIndexSeries<T> {
    type Output = CycleIndexSeries<T>;

    fn neg(self) -> CycleIndexSeries<T> {
        let a = self.clone();
        CycleIndexSeries::from_fn(move |n| Ok(a.component(n)?.neg()))
    }
}

/// Forces the pair `(a[i], b[j])`, lower degree first, and returns `None`
/// when either factor vanishes. If the first factor re-enters its own
/// definition, the other factor is tried; a zero there still guards the pair.
type ComponentPair<T> = (Arc<PowerSumPoly<T>>, Arc<PowerSumPoly<T>>);

fn guarded_pair<T: Scalar>(
    a: &CycleIndexSeries<T>,
    i: usize,
    b: &CycleIndexSeries<T>,
    j: usize,
) -> Result<Option<ComponentPair<T>>> {
    let a_first = i <= j;
    let (first, first_deg, second, second_deg) = if a_first { (a, i, b, j) } else { (b, j, a, i) };
    let head = match first.component(first_deg) {
        Ok(head) => head,
        Err(err @ Error::UnguardedRecursion { .. }) => {
            return if second.component(second_deg)?.is_zero() {
                Ok(None)
            } else {
                Err(err)
            };
        }
        Err(err) => return Err(err),
    };
    if head.is_zero() {
        return Ok(None);
    }
    let tail = second.component(second_deg)?;
    if tail.is_zero() {
        return Ok(None);
    }
    Ok(Some(if a_first { (head, tail) } else { (tail, head) }))
}

/// Graded Cauchy product; see [`guarded_pair`] for how splits are forced, so
/// that both `L = 1 + X·L` and `L = 1 + L·X` are guarded.
impl<T: Scalar> Mul for &CycleIndexSeries<T> {
    type Output = CycleIndexSeries<T>;

    fn mul(self, rhs: Self) -> CycleIndexSeries<T> {
        let (a, b) = (self.clone(), rhs.clone());
        CycleIndexSeries::from_fn(move |n| {
            let mut out = PowerSumPoly::zero(n);
            for k in 0..=n {
                if let Some((fa, fb)) = guarded_pair(&a, k, &b, n - k)? {
                    out.add_product(&fa, &fb);
                }
            }
            Ok(out)
        })
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<T: Scalar> $tr for CycleIndexSeries<T> {
            type Output = CycleIndexSeries<T>;
            fn $method(self, rhs: Self) -> CycleIndexSeries<T> {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for CycleIndexSeries<T> {
    type Output = CycleIndexSeries<T>;
    fn neg(self) -> CycleIndexSeries<T> {
        -&self
    }
}

/// A series that can be referred to before its definition is attached.
///
/// The defined series and its body usually reference each other, so the pair
/// lives for the rest of the program.
pub struct SeriesHandle<T> {
    slot: Arc<OnceLock<CycleIndexSeries<T>>>,
    series: CycleIndexSeries<T>,
}

impl<T: Scalar> Default for SeriesHandle<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> SeriesHandle<T> {
    pub fn new() -> Self {
        let slot: Arc<OnceLock<CycleIndexSeries<T>>> = Arc::new(OnceLock::new());
        let target = Arc::clone(&slot);
        let series = CycleIndexSeries::from_fn(move |n| match target.get() {
            Some(body) => Ok((*body.component(n)?).clone()),
            None => Err(Error::Undefined),
        });
        Self { slot, series }
    }

    /// The series standing for this handle; usable inside its own definition.
    pub fn series(&self) -> CycleIndexSeries<T> {
        self.series.clone()
    }

    pub fn define(&self, body: CycleIndexSeries<T>) -> Result<()> {
        self.slot.set(body).map_err(|_| Error::AlreadyDefined)
    }
}

type InnerSelector<T> = Box<dyn Fn(u32) -> CycleIndexSeries<T> + Send + Sync>;

/// `F ∘ G` where the series substituted for `p_i` is chosen per `i`.
///
/// Ordinary plethysm substitutes `G` stretched by `i` for every `p_i`;
/// Γ-plethysm substitutes `G(γ^i)` stretched by `i`. Both go through here.
/// Inner component at `(part, degree)`, stretched by `part`.
type StretchCache<T> = HashMap<(u32, usize), Arc<PowerSumPoly<T>>>;

pub(crate) struct Plethysm<T> {
    outer: CycleIndexSeries<T>,
    inner: InnerSelector<T>,
    stretched: Mutex<StretchCache<T>>,
}

impl<T: Scalar> Plethysm<T> {
    pub(crate) fn new<F>(outer: CycleIndexSeries<T>, inner: F) -> Self
    where
        F: Fn(u32) -> CycleIndexSeries<T> + Send + Sync + 'static,
    {
        Self {
            outer,
            inner: Box::new(inner),
            stretched: Mutex::new(HashMap::new()),
        }
    }

    /// Degree `i·m` component of the inner series for `p_i`.
    fn stretched(&self, part: u32, m: usize) -> Result<Arc<PowerSumPoly<T>>> {
        if let Some(hit) = self.stretched.lock().unwrap().get(&(part, m)) {
            return Ok(Arc::clone(hit));
        }
        let series = (self.inner)(part);
        let checked = self.stretched.lock().unwrap().contains_key(&(part, 0));
        if !checked {
            // First use of this inner series: its constant term must vanish.
            if !series.component(0)?.is_zero() {
                return Err(Error::NonzeroConstantTerm);
            }
            self.stretched
                .lock()
                .unwrap()
                .insert((part, 0), Arc::new(PowerSumPoly::zero(0)));
        }
        let poly = Arc::new(series.component(m)?.stretch(part)?);
        self.stretched
            .lock()
            .unwrap()
            .insert((part, m), Arc::clone(&poly));
        Ok(poly)
    }
}

/// Walk over the outer monomials as a trie of prefixes (largest parts first),
/// carrying the truncated product of the substituted series for the prefix.
struct PlethysmWalk<'a, T> {
    plethysm: &'a Plethysm<T>,
    target: usize,
    coeffs: HashMap<Vec<u32>, T>,
    /// Smallest total degree of an outer monomial extending each prefix.
    reach: HashMap<Vec<u32>, usize>,
    result: PowerSumPoly<T>,
}

impl<T: Scalar> PlethysmWalk<'_, T> {
    fn max_degree(&self, prefix: &[u32], prefix_size: usize) -> usize {
        self.target - self.reach[prefix] + prefix_size
    }

    /// `product[d]` holds the degree-`d` part of the product for `prefix`
    /// (zero below `prefix_size`).
    fn visit(
        &mut self,
        prefix: &mut Vec<u32>,
        prefix_size: usize,
        product: &[PowerSumPoly<T>],
    ) -> Result<()> {
        if let Some(c) = self.coeffs.get(prefix.as_slice()) {
            let c = c.clone();
            self.result.add_scaled(&product[self.target], &c);
        }
        let largest = prefix
            .last()
            .map_or(self.target - prefix_size, |&p| p as usize)
            .min(self.target - prefix_size);
        for part in (1..=largest as u32).rev() {
            prefix.push(part);
            if self.reach.contains_key(prefix.as_slice()) {
                let size = prefix_size + part as usize;
                let top = self.max_degree(prefix, size);
                let mut next: Vec<PowerSumPoly<T>> = (0..=top).map(PowerSumPoly::zero).collect();
                for (d, slot) in next.iter_mut().enumerate().skip(size) {
                    let mut m = 1;
                    while part as usize * m + prefix_size <= d {
                        let lower = &product[d - part as usize * m];
                        if !lower.is_zero() {
                            let block = self.plethysm.stretched(part, m)?;
                            slot.add_product(lower, &block);
                        }
                        m += 1;
                    }
                }
                self.visit(prefix, size, &next)?;
            }
            prefix.pop();
        }
        Ok(())
    }
}

impl<T: Scalar> Generator<T> for Plethysm<T> {
    fn generate(&self, n: usize) -> Result<PowerSumPoly<T>> {
        let mut coeffs = HashMap::new();
        let mut reach: HashMap<Vec<u32>, usize> = HashMap::new();
        for k in 0..=n {
            let component = self.outer.component(k)?;
            for (partition, c) in component.iter() {
                let parts = partition.parts();
                for cut in 0..=parts.len() {
                    let best = reach.entry(parts[..cut].to_vec()).or_insert(k);
                    *best = (*best).min(k);
                }
                coeffs.insert(parts.to_vec(), c.clone());
            }
        }
        if coeffs.is_empty() {
            return Ok(PowerSumPoly::zero(n));
        }
        let mut walk = PlethysmWalk {
            plethysm: self,
            target: n,
            coeffs,
            reach,
            result: PowerSumPoly::zero(n),
        };
        let top = walk.max_degree(&[], 0);
        let mut root: Vec<PowerSumPoly<T>> = (0..=top).map(PowerSumPoly::zero).collect();
        root[0] = PowerSumPoly::one();
        walk.visit(&mut Vec::new(), 0, &root)?;
        Ok(walk.result)
    }
}
