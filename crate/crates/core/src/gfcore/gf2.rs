//! Bit-packed Gauss-Jordan elimination for GF(2).

const WORD: usize = 64;

pub(crate) fn pack(row: &[u32]) -> Vec<u64> {
    let mut words = vec![0u64; row.len().div_ceil(WORD)];
    for (j, &v) in row.iter().enumerate() {
        if v & 1 == 1 {
            words[j / WORD] |= 1 << (j % WORD);
        }
    }
    words
}

pub(crate) fn unpack(words: &[u64], cols: usize, out: &mut [u32]) {
    for (j, slot) in out.iter_mut().enumerate().take(cols) {
        *slot = ((words[j / WORD] >> (j % WORD)) & 1) as u32;
    }
}

#[inline]
pub(crate) fn bit(words: &[u64], j: usize) -> bool {
    (words[j / WORD] >> (j % WORD)) & 1 == 1
}

#[inline]
pub(crate) fn xor_from(dst: &mut [u64], src: &[u64], start_word: usize) {
    for (d, s) in dst[start_word..].iter_mut().zip(&src[start_word..]) {
        *d ^= *s;
    }
}

pub(crate) fn rref(rows: usize, cols: usize, data: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| pack(&data[i * cols..(i + 1) * cols]))
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| bit(&m[i], c)) else {
            continue;
        };
        m.swap(pr, r);
        let pivot = std::mem::take(&mut m[r]);
        let w = c / WORD;
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && bit(row, c) {
                xor_from(row, &pivot, w);
            }
        }
        m[r] = pivot;
        pivots.push(c);
        r += 1;
    }
    let mut out = vec![0u32; rows * cols];
    for (i, row) in m.iter().enumerate() {
        unpack(row, cols, &mut out[i * cols..(i + 1) * cols]);
    }
    (out, pivots)
}
