// most frequent letter
int main()
{
    char str[1000];
    int freq[26] = {0}, k, mx = 0;
    scanf("%s", str);
    for (k = 0; str[k]; k++)
        if (str[k] >= 'a' && str[k] <= 'z')
            freq[str[k] - 'a']++;
    for (k = 1; k < 26; k++)
        if (freq[k] > freq[mx])
            mx = k;
    printf("%c %d\n", 'a' + mx, freq[mx]);
    return 0;
}
