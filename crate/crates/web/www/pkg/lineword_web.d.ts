/* tslint:disable */
/* eslint-disable */

/**
 * Cutting sequence of `y = λx` together with the crossing points, in
 * order, for plotting.
 */
export function cutting_sequence(slope: string, length: number): string;

/**
 * Complexity and palindrome tables, the Rauzy graph of the given order,
 * and the linearity verdict for ternary input.
 *
 * `source` is `fibonacci`, `sm`, `tribonacci`, or a digit string.
 */
export function factor_analysis(source: string, length: number, order: number): string;

/**
 * Intersection sequence of a line in space, its three removal projections
 * and the projection slopes.
 */
export function intersection(line: string, length: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly cutting_sequence: (a: number, b: number, c: number) => [number, number, number, number];
    readonly factor_analysis: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly intersection: (a: number, b: number, c: number) => [number, number, number, number];
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
