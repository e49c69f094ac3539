/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_solution_iterations: (a: number) => number;
export const __wbg_get_solution_l2: (a: number) => number;
export const __wbg_get_solution_linf: (a: number) => number;
export const __wbg_set_solution_iterations: (a: number, b: number) => void;
export const __wbg_set_solution_l2: (a: number, b: number) => void;
export const __wbg_set_solution_linf: (a: number, b: number) => void;
export const __wbg_solution_free: (a: number, b: number) => void;
export const kernel_profiles: (a: number, b: number, c: number) => [number, number, number, number];
export const solution_coords: (a: number) => [number, number];
export const solution_values: (a: number) => [number, number];
export const solve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const triangle_disk_integral: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
