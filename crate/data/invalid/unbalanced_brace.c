/* expect 4:14 */
int f(void)
{
    return 0;
