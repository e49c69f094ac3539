/* tslint:disable */
/* eslint-disable */

export class Solution {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    iterations: number;
    l2: number;
    linf: number;
    /**
     * Cell corner coordinates, six per cell.
     */
    readonly coords: Float64Array;
    /**
     * Discrete solution at the cell corners, three per cell.
     */
    readonly values: Float64Array;
}

/**
 * `R`, `R̄`, `R̄̄` sampled at `samples` evenly spaced `s ∈ [0, 1]`, one
 * profile after the other.
 */
export function kernel_profiles(spec: string, samples: number): Float64Array;

/**
 * Solves `problem` (`constant` or `cosine`) on the n×n unit square with `δ = ratio / n`.
 */
export function solve(n: number, ratio: number, spec: string, problem: string): Solution;

/**
 * Exact `∫_{T ∩ B(c, 2δ)} R_δ(c, y) dy` for the triangle `[x0, y0, x1, y1, x2, y2]`.
 */
export function triangle_disk_integral(spec: string, delta: number, cx: number, cy: number, tri: Float64Array): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_solution_iterations: (a: number) => number;
    readonly __wbg_get_solution_l2: (a: number) => number;
    readonly __wbg_get_solution_linf: (a: number) => number;
    readonly __wbg_set_solution_iterations: (a: number, b: number) => void;
    readonly __wbg_set_solution_l2: (a: number, b: number) => void;
    readonly __wbg_set_solution_linf: (a: number, b: number) => void;
    readonly __wbg_solution_free: (a: number, b: number) => void;
    readonly kernel_profiles: (a: number, b: number, c: number) => [number, number, number, number];
    readonly solution_coords: (a: number) => [number, number];
    readonly solution_values: (a: number) => [number, number];
    readonly solve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly triangle_disk_integral: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
