/* most frequent letter */
int main()
{
    char buf[1000];
    int times[26] = {0}, k, top = 0;
    scanf("%s", buf);
    for (k = 0; buf[k]; k++)
        if (buf[k] >= 'a' && buf[k] <= 'z')
            times[buf[k] - 'a']++;
    for (k = 1; k < 26; k++)
        if (times[k] > times[top])
            top = k;
    printf("%c %d\n", 'a' + top, times[top]);
    return 0;
}
